#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontic {

// Exit codes: 0 expected result, 1 usage or configuration error, 2 internal
// inconsistency (oracle disagreement, unexpected theorem status, failed
// self-check).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontic
