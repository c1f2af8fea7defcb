#include "ontic/pbr.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ontic/errors.hpp"

namespace ontic {

const Space& qubit_space() {
    static const Space space{"0", "1"};
    return space;
}

StateVector ket_zero() { return StateVector::basis(qubit_space(), "0"); }

StateVector ket_plus() {
    Amplitude h(Surd::sqrt(Rational(1, 2)));
    return StateVector(qubit_space(), {h, h});
}

namespace {

StateVector ket_minus() {
    Amplitude h(Surd::sqrt(Rational(1, 2)));
    return StateVector(qubit_space(), {h, Amplitude(0) - h});
}

StateVector ket_one() { return StateVector::basis(qubit_space(), "1"); }

// (u1 ⊗ v1 + u2 ⊗ v2) / sqrt(2)
StateVector bell_like(const StateVector& u1, const StateVector& v1, const StateVector& u2, const StateVector& v2) {
    StateVector x = tensor(u1, v1);
    StateVector y = tensor(u2, v2);
    Amplitude h(Surd::sqrt(Rational(1, 2)));
    std::vector<Amplitude> amps;
    for (std::size_t i = 0; i < x.dim(); ++i) amps.push_back(h * (x.amps()[i] + y.amps()[i]));
    return StateVector(x.space(), std::move(amps));
}

bool vanishes(const Real& p) { return p.is_exact() ? p.is_zero() : std::abs(p.to_double()) <= 1e-12; }

}  // namespace

const ProjectiveMeasurement& pbr_fixture_measurement() {
    static const ProjectiveMeasurement m = [] {
        const StateVector z = ket_zero(), o = ket_one(), p = ket_plus(), n = ket_minus();
        std::vector<Effect> effects{
            {"xi1", {bell_like(z, o, o, z)}},
            {"xi2", {bell_like(z, n, o, p)}},
            {"xi3", {bell_like(p, o, n, z)}},
            {"xi4", {bell_like(p, n, n, p)}},
        };
        ProjectiveMeasurement meas("PBR", tensor(z, z).space(), std::move(effects));
        const StateVector excluded[] = {tensor(z, z), tensor(z, p), tensor(p, z), tensor(p, p)};
        for (std::size_t k = 0; k < 4; ++k) {
            if (!inner_product(meas.effects()[k].range.front(), excluded[k]).is_zero()) {
                throw Error("PBR fixture basis fails its orthogonality condition for " + meas.effects()[k].outcome);
            }
        }
        return meas;
    }();
    return m;
}

ProjectiveMeasurement product_basis_measurement() {
    const Space space = tensor(ket_zero(), ket_zero()).space();
    std::vector<std::pair<std::string, std::vector<ModeLabel>>> groups;
    for (const auto& label : space) groups.push_back({label.to_string(), {label}});
    return ProjectiveMeasurement::from_modes("product-basis", space, groups);
}

TheoremReport pbr_check(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m) {
    if (psi1.space() != psi2.space()) throw SpaceMismatch("pbr_check: the two states live on different spaces");
    const Amplitude overlap = inner_product(psi1, psi2);
    if (overlap.is_zero()) {
        throw PreconditionError("pbr_check: the states are orthogonal; the argument concerns non-orthogonal states");
    }

    const std::pair<std::string, const StateVector*> single[] = {{"psi1", &psi1}, {"psi2", &psi2}};
    TheoremReport r;
    r.theorem = "PBR";
    r.trace.push_back({"non-orthogonal-preparations", "<psi1|psi2> = " + overlap.to_string() +
                                                           " != 0, so a psi-epistemic model may give the two epistemic "
                                                           "states a common region of positive weight"});
    r.trace.push_back({"product-independence", "PIP-PS: P_{n⊗m}(lambda_A, lambda_B) = P_n(lambda_A) P_m(lambda_B); a pair "
                                               "drawn from the common region then has positive weight under all four products"});

    std::set<std::string> excluded;
    bool all_excluded = true;
    for (const auto& [na, a] : single) {
        for (const auto& [nb, b] : single) {
            const StateVector prod = tensor(*a, *b);
            if (prod.space() != m.space()) throw SpaceMismatch("pbr_check: measurement does not act on the two-copy space");
            const std::string prep = na + "⊗" + nb;
            const auto dist = born_probabilities(prod, m);
            bool any = false;
            for (const auto& e : m.effects()) {
                if (!vanishes(dist.at(e.outcome))) continue;
                any = true;
                excluded.insert(e.outcome);
                std::string amp;
                for (const auto& v : e.range) amp += (amp.empty() ? "" : "; ") + inner_product(v, prod).to_string();
                r.zero_conditions.push_back({prep, e.outcome, amp});
                r.trace.push_back({"antidistinguishing-zero", "P(" + e.outcome + " | " + prep + ") = 0 since <" + e.outcome +
                                                                  "|" + prep + "> = " + amp + "; a psi-anomic response "
                                                                  "must give " + e.outcome + " probability 0 on the pair"});
            }
            if (!any) {
                all_excluded = false;
                r.trace.push_back({"no-exclusion", "no outcome has probability 0 for " + prep});
            }
        }
    }

    const bool covers = all_excluded && excluded.size() == m.effects().size();
    if (covers) {
        r.status = "contradiction";
        r.trace.push_back({"response-normalization", "sum over the " + std::to_string(m.effects().size()) +
                                                         " outcomes of P(xi | lambda_A, lambda_B) must be 1, but every term "
                                                         "vanishes: 1 = 0"});
        r.trace.push_back({"conclusion", "the common region is empty: the supports of psi1 and psi2 cannot overlap"});
    } else {
        r.status = "inconclusive";
        r.trace.push_back({"inconclusive-measurement", "the vanishing outcomes do not exhaust the measurement; no "
                                                       "normalization conflict follows"});
    }
    r.expected = covers;
    r.notes.push_back("Verified by the direct antidistinguishability argument; PIP-PS makes a feasibility program bilinear.");
    return r;
}

}  // namespace ontic
