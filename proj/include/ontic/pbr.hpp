#pragma once

#include "ontic/nogo.hpp"
#include "ontic/state.hpp"

namespace ontic {

// Qubit space {0, 1} and the states |0>, |+>.
const Space& qubit_space();
StateVector ket_zero();
StateVector ket_plus();

// Entangled basis on the two-copy space that excludes, in turn, |0>|0>,
// |0>|+>, |+>|0> and |+>|+>. Orthonormality, completeness and the four
// exclusions are checked on construction (throws Error if any fails).
const ProjectiveMeasurement& pbr_fixture_measurement();
// Computational basis on the two-copy space.
ProjectiveMeasurement product_basis_measurement();

// Antidistinguishability argument: with <psi1|psi2> != 0 and each of the four
// product preparations excluded by some outcome of `m`, a shared ontic state
// would have to give every outcome probability 0. Status "contradiction"
// when the exclusions cover all outcomes, otherwise "inconclusive".
// Throws PreconditionError for orthogonal inputs, SpaceMismatch if `m` does
// not act on psi1 ⊗ psi2.
TheoremReport pbr_check(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m);

}  // namespace ontic
