#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontic/lp.hpp"
#include "ontic/ontology.hpp"
#include "ontic/oracle.hpp"
#include "ontic/scenario.hpp"

namespace ontic {

struct TraceStep {
    std::string tag;
    std::string statement;
};

// One vanishing Born probability of an antidistinguishing measurement.
struct ZeroCondition {
    std::string preparation;
    std::string outcome;
    std::string amplitude;  // <xi | psi_n ⊗ psi_m>
};

struct TheoremReport {
    std::string theorem;  // "PBR", "HROI", "HROI2"
    std::optional<Rational> a2;
    std::vector<std::string> chis;
    std::vector<std::string> relaxed;

    // infeasible | feasible | optimal | unbounded | contradiction | inconclusive
    std::string status;
    // Whether `status` is what the theorem predicts under the active assumptions.
    bool expected = false;

    std::optional<Rational> max_overlap;
    std::optional<Certificate> certificate;
    std::optional<DualCertificate> dual;
    std::vector<std::string> row_labels;  // aligned with certificate / dual multipliers
    std::vector<std::string> row_tags;
    std::vector<std::pair<std::string, Rational>> witness;  // nonzero entries only
    std::optional<OntologicalModel> witness_model;
    std::optional<bool> witness_reproduces;
    std::size_t admissible_points = 0;

    std::string oracle_status;
    bool oracle_agrees = true;

    std::vector<ZeroCondition> zero_conditions;
    std::vector<TraceStep> trace;
    std::vector<std::string> notes;
};

// Names of the assumptions switched off in `a`, in a fixed order.
std::vector<std::string> relaxed_names(const AssumptionSet& a);
// Parses "psi_anomic", "pip", "pip_ps", "roi" into a relaxation of all().
AssumptionSet relax(const std::vector<std::string>& names);

// psi_in through the which-path stage and the device at chi in {0, pi}, with
// sequential ties, ROI chi-independence of the blocked runs and the ROI ties
// between the blocked and unblocked runs on the which-path subset.
Scenario hroi2_scenario(const Rational& a2);
// psi_plus and psi_0 through the device at chi in {0, pi}, ROI
// chi-independence on the support of psi_0, maximizing the common mass.
Scenario hroi_scenario(const Rational& a2);

// Requires 0 < a2 <= 1/2; throws HypothesisOutOfRange otherwise.
ConstraintSystem compile_hroi2(const Rational& a2, const AssumptionSet& assumptions = AssumptionSet::all());

TheoremReport check_hroi_original(const Rational& a2, const AssumptionSet& assumptions = AssumptionSet::all());
TheoremReport check_hroi2(const Rational& a2, const AssumptionSet& assumptions = AssumptionSet::all());

// Independent route: enumerates admissible assignments by backtracking, builds
// its own convex-hull membership program and decides it by vertex
// enumeration. Status and optimum are comparable with solve(compile(...)).
FeasibilityResult enumerate_oracle(const Scenario& sc, const AssumptionSet& assumptions,
                                   const OracleOptions& opts = {});

enum class CounterexampleSpace { SinglePoint, ArmLabel };

// Psi-nomic model of the whole interferometric fragment: each preparation
// answers with its own Born table. ArmLabel uses Lambda = {arm0, arm1} with
// weights (a^2, b^2) for psi_in and psi_plus and (1, 0) for psi_0.
OntologicalModel nomic_counterexample(const Rational& a2, CounterexampleSpace space = CounterexampleSpace::SinglePoint);

// Rewrites a psi-anomic model over points (lambda, s), s a deterministic
// assignment of outcomes to every context, with weight P(lambda) times
// prod_c P(s(c) | c, lambda). Statistics are unchanged.
OntologicalModel deterministic_decomposition(const OntologicalModel& model);

}  // namespace ontic
