#pragma once

#include <span>
#include <string>
#include <vector>

#include "ontic/ontology.hpp"
#include "ontic/phase.hpp"

// Names and quantum statistics of the interferometric fragment.
namespace ontic::hardy {

inline const std::string kPsiIn = "psi_in";
inline const std::string kPsiPlus = "psi_plus";
inline const std::string kPsiZero = "psi_0";

inline const std::string kM1 = "M1";
inline const std::string kYes = "Yes";
inline const std::string kNo = "No";

std::string m2(const Phase& chi);     // "M2[pi]": device alone, state given
std::string m0_m2(const Phase& chi);  // "M0;M2[pi]": BS0, no blocker, device
std::string m1_m2(const Phase& chi);  // "M1;M2[pi]": BS0, blocker, device

const std::vector<std::string>& port_outcomes();   // 3, 4, 2
const std::vector<std::string>& joint_outcomes();  // "3,Yes" ... "∅,No"
const std::vector<std::string>& which_outcomes();  // Yes, No
std::string joint(const std::string& beta, const std::string& alpha);

// chi in {0, pi}.
std::span<const Phase> default_phases();

// Quantum statistics for psi_in (M1, M0;M2[chi], M1;M2[chi]), psi_plus and
// psi_0 (M2[chi]). Requires exact rational probabilities at every chi.
Fragment fragment(const Rational& a2, std::span<const Phase> chis = default_phases());

// Only the psi_in part / only the psi_plus, psi_0 part.
Fragment blocked_fragment(const Rational& a2, std::span<const Phase> chis = default_phases());
Fragment overlap_fragment(const Rational& a2, std::span<const Phase> chis = default_phases());

}  // namespace ontic::hardy
