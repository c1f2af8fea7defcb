#include "ontic/hardy.hpp"

#include "ontic/interferometer.hpp"

namespace ontic::hardy {

std::string m2(const Phase& chi) { return "M2[" + chi.label() + "]"; }
std::string m0_m2(const Phase& chi) { return "M0;" + m2(chi); }
std::string m1_m2(const Phase& chi) { return "M1;" + m2(chi); }

std::string joint(const std::string& beta, const std::string& alpha) { return beta + "," + alpha; }

const std::vector<std::string>& port_outcomes() {
    static const std::vector<std::string> out{"3", "4", "2"};
    return out;
}

const std::vector<std::string>& joint_outcomes() {
    static const std::vector<std::string> out = [] {
        std::vector<std::string> v;
        for (const auto& alpha : {kYes, kNo}) {
            for (const auto& beta : {std::string("3"), std::string("4"), std::string("2"), kStopped}) {
                v.push_back(joint(beta, alpha));
            }
        }
        return v;
    }();
    return out;
}

const std::vector<std::string>& which_outcomes() {
    static const std::vector<std::string> out{kYes, kNo};
    return out;
}

std::span<const Phase> default_phases() {
    static const std::vector<Phase> phases{Phase::pi_fraction(0), Phase::pi_fraction(1)};
    return phases;
}

namespace {

Distribution exact(const OutcomeDistribution& d) { return Distribution{d.outcomes(), d.rationals()}; }

}  // namespace

Fragment blocked_fragment(const Rational& a2, std::span<const Phase> chis) {
    CircuitConfig cfg = CircuitConfig::make(a2);
    Fragment f;
    f.push_back({kPsiIn, kM1, Distribution{which_outcomes(), {cfg.a2, cfg.b2()}}});
    for (const auto& chi : chis) f.push_back({kPsiIn, m0_m2(chi), exact(run_m0_m2(cfg, chi))});
    for (const auto& chi : chis) {
        Distribution d = exact(run_m1_m2(cfg, chi).flattened());
        f.push_back({kPsiIn, m1_m2(chi), d});
    }
    return f;
}

Fragment overlap_fragment(const Rational& a2, std::span<const Phase> chis) {
    CircuitConfig cfg = CircuitConfig::make(a2);
    Fragment f;
    for (const auto& chi : chis) f.push_back({kPsiPlus, m2(chi), exact(run_m0_m2(cfg, chi))});
    for (const auto& chi : chis) {
        CircuitConfig at = cfg;
        at.chi = chi;
        f.push_back({kPsiZero, m2(chi), exact(run_psi0_full(at))});
    }
    return f;
}

Fragment fragment(const Rational& a2, std::span<const Phase> chis) {
    Fragment f = blocked_fragment(a2, chis);
    Fragment g = overlap_fragment(a2, chis);
    f.insert(f.end(), g.begin(), g.end());
    return f;
}

}  // namespace ontic::hardy
