#pragma once

#include <cstdint>

#include "ontic/lp.hpp"

namespace ontic {

struct OracleOptions {
    // Upper bound on the number of candidate bases examined.
    std::uint64_t max_bases = 20'000'000;
};

// Independent feasibility decision by enumerating basic feasible solutions
// (a feasible system has one with at most rank-many nonzeros). After a
// presolve that zeroes variables forced by homogeneous same-sign rows, every
// rank-sized column subset is solved exactly. With an objective the best
// vertex is returned; unboundedness is decided by enumerating the normalized
// recession directions. Throws SizeCapExceeded past `max_bases`.
//
// Returns status, witness and optimum only; certificates come from solve().
FeasibilityResult enumerate_oracle(const ConstraintSystem& cs, const OracleOptions& opts = {});
FeasibilityResult enumerate_oracle_serial(const ConstraintSystem& cs, const OracleOptions& opts = {});

}  // namespace ontic
