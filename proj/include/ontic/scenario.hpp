#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontic/lp.hpp"
#include "ontic/ontology.hpp"

namespace ontic {

struct ContextSpec {
    std::string name;
    std::vector<std::string> outcomes;
};

// Quantum statistics one preparation must reproduce in one context.
struct Statistic {
    std::string preparation;
    std::string context;
    std::vector<Rational> probs;  // aligned with the context's outcomes
    std::string tag;
};

// "The outcome of `context` lies in `outcomes`."
struct Event {
    std::string context;
    std::vector<std::string> outcomes;
};

enum class TieKind { Sequential, Roi };

// Admissibility rule for deterministic assignments: where `guard` holds,
// lhs and rhs are both true or both false. A tie scoped to a preparation
// only restricts the points that preparation may weight.
struct Tie {
    std::string tag;
    TieKind kind = TieKind::Sequential;
    bool requires_anomic = false;  // compares responses guided by different waves
    std::optional<Event> guard;
    Event lhs;
    Event rhs;
    std::optional<std::string> preparation;
};

// Maximize sum_s min(P_first(s), P_second(s)) via m_s <= w_first,s, m_s <= w_second,s.
struct OverlapObjective {
    std::string first;
    std::string second;
};

struct Scenario {
    std::string name;
    std::vector<std::string> preparations;
    std::vector<ContextSpec> contexts;
    std::vector<Statistic> statistics;
    std::vector<Tie> ties;
    std::optional<OverlapObjective> overlap;

    std::size_t context_index(const std::string& name) const;
    Fragment fragment() const;
};

// Outcome index per context.
using Assignment = std::vector<std::uint16_t>;

struct EnumerationLimits {
    std::uint64_t max_raw = 10'000'000;
    std::uint64_t max_admissible = 1'000'000;
};

// Deterministic assignments satisfying every tie in `ties`, in mixed-radix
// order (first context slowest). The OpenMP kernel and the serial reference
// return identical lists. Throws SizeCapExceeded past the limits.
std::vector<Assignment> admissible_assignments(const std::vector<ContextSpec>& contexts, const std::vector<Tie>& ties,
                                               const EnumerationLimits& limits = {});
std::vector<Assignment> admissible_assignments_serial(const std::vector<ContextSpec>& contexts,
                                                      const std::vector<Tie>& ties,
                                                      const EnumerationLimits& limits = {});

bool satisfies(const Assignment& s, const std::vector<ContextSpec>& contexts, const Tie& tie);

// Ties surviving the relaxation: dropping ROI removes Roi ties, dropping
// psi-anomic removes ties that compare responses under different waves.
std::vector<Tie> active_ties(const Scenario& sc, const AssumptionSet& assumptions);

// An ontic point: one shared assignment (psi-anomic), or one assignment per
// preparation (responses indexed by the wave).
using OnticPoint = std::vector<Assignment>;

struct CompiledScenario {
    Scenario scenario;
    AssumptionSet assumptions;
    ConstraintSystem system;
    std::vector<OnticPoint> points;
    // weight_var[p][slot][point]: LP variable of the weight, or -1 when the point
    // is inadmissible for preparation p. slot is 0 under PIP, else the context.
    std::vector<std::vector<std::vector<long>>> weight_var;
    std::vector<long> overlap_var;  // per point, -1 if absent

    const Assignment& response(const OnticPoint& pt, std::size_t prep) const;
    std::size_t slots() const { return weight_var.empty() ? 0 : weight_var.front().size(); }
};

// Builds the feasibility program: normalization and statistics rows per
// preparation (and per context when PIP is relaxed), plus the overlap
// objective when the scenario has one. Ties shape the variable set.
CompiledScenario compile(const Scenario& sc, const AssumptionSet& assumptions, const EnumerationLimits& limits = {});

// Deterministic ontological model with one ontic state per weighted point.
OntologicalModel model_from_witness(const CompiledScenario& cs, const std::vector<Rational>& witness);

// Short readable description of an ontic point ("M1=Yes M0;M2[0]=3 ...").
std::string describe(const CompiledScenario& cs, const OnticPoint& pt);

}  // namespace ontic
