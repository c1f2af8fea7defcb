#pragma once

#include <json.hpp>

#include "ontic/nogo.hpp"

namespace ontic {

// Rationals as canonical "p/q" strings; certificate rows with a zero
// multiplier are omitted.
nlohmann::json report_to_json(const TheoremReport& report);

}  // namespace ontic
