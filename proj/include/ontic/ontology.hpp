#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontic/rational.hpp"

namespace ontic {

struct AssumptionSet {
    bool psi_anomic = false;
    bool pip = false;
    bool pip_ps = false;
    bool roi = false;

    static AssumptionSet all() { return {true, true, true, true}; }
    friend bool operator==(const AssumptionSet&, const AssumptionSet&) = default;
};

// P_Psi(lambda). A `context` index marks a measurement-dependent epistemic
// state, which is exactly what the preparation independence postulate forbids.
struct EpistemicState {
    std::string preparation;
    std::optional<std::string> context;
    std::vector<Rational> weights;  // aligned with the ontic space
};

// P(outcome | context, lambda). A `preparation` index makes the response
// wavefunction-dependent (psi-nomic).
struct ResponseTable {
    std::string context;
    std::optional<std::string> preparation;
    std::vector<std::string> outcomes;
    std::vector<std::vector<Rational>> entries;  // [lambda][outcome]
};

// Finite ontological model. Construction validates normalization of every
// epistemic state and response row, label uniqueness, and that a model
// flagged psi-anomic carries no preparation-indexed response table.
class OntologicalModel {
public:
    OntologicalModel(std::vector<std::string> ontic_states, std::vector<EpistemicState> epistemics,
                     std::vector<ResponseTable> responses, AssumptionSet flags);

    const std::vector<std::string>& ontic_states() const { return ontic_states_; }
    const std::vector<EpistemicState>& epistemics() const { return epistemics_; }
    const std::vector<ResponseTable>& responses() const { return responses_; }
    const AssumptionSet& flags() const { return flags_; }
    std::size_t ontic_index(const std::string& lambda) const;

    // Distinct preparations in first-appearance order.
    std::vector<std::string> preparations() const;
    std::vector<std::string> contexts() const;
    bool has_preparation(const std::string& prep) const;

    // Measurement-indexed state if present, else the PIP state. Throws UnknownLabel.
    const EpistemicState& epistemic(const std::string& prep, const std::string& context) const;
    // The PIP state (no context index) for `prep`. Throws UnknownLabel.
    const EpistemicState& epistemic(const std::string& prep) const;
    // Preparation-indexed table if present, else the shared table.
    const ResponseTable* find_response(const std::string& context, const std::string& prep) const;
    const ResponseTable& response(const std::string& context, const std::string& prep) const;

    // Fragment parameter a^2 carried along in model files.
    std::optional<Rational> a2;

private:
    std::vector<std::string> ontic_states_;
    std::vector<EpistemicState> epistemics_;
    std::vector<ResponseTable> responses_;
    AssumptionSet flags_;
};

struct Distribution {
    std::vector<std::string> outcomes;
    std::vector<Rational> probs;
    const Rational& at(const std::string& outcome) const;
};

// (preparation, context, quantum distribution) triples a model must reproduce.
struct FragmentEntry {
    std::string preparation;
    std::string context;
    Distribution quantum;
};
using Fragment = std::vector<FragmentEntry>;

// sum_lambda P(alpha | context, lambda) P_prep(lambda).
Distribution predicted_statistics(const OntologicalModel& model, const std::string& prep, const std::string& context);

struct EntryDeviation {
    std::string preparation;
    std::string context;
    Rational deviation;  // max |predicted - quantum| over outcomes
    bool missing = false;  // preparation or context absent from the model
};

struct ReproductionReport {
    bool reproduces = false;
    Rational max_deviation;
    std::vector<EntryDeviation> entries;
};

// True iff every fragment entry is matched within `tol` (0 = exactly).
ReproductionReport reproduces(const OntologicalModel& model, const Fragment& fragment, const Rational& tol = 0);

struct Overlap {
    Rational mass;  // sum_lambda min(P1, P2)
    bool disjoint;  // P1(lambda) P2(lambda) == 0 everywhere
};

Overlap support_overlap(const OntologicalModel& model, const std::string& prep1, const std::string& prep2);

// P(beta | alpha, lambda) = P(beta, alpha | lambda) / P(alpha | lambda) for the
// sequential context `second` (outcomes "beta,alpha") following `first`.
// Throws UndefinedConditional when P(alpha | lambda) = 0.
Rational conditional_response(const OntologicalModel& model, const std::string& second, const std::string& first,
                              const std::string& beta, const std::string& alpha, const std::string& lambda,
                              const std::string& prep = {});

// Adjoins a wavefunction token tau ranging over the model's preparations:
// mu = (lambda, tau), P~_Psi(mu) = P_Psi(lambda)[tau = Psi] and
// P(alpha | mu) = P_tau(alpha | lambda). The result is psi-anomic and
// psi-ontic and reproduces every statistic of the parent. A (tau, context)
// pair for which the parent has no table gets a uniform response; such
// points carry no weight under any preparation measured in that context.
OntologicalModel lift_model(const OntologicalModel& model);

std::string lifted_label(const std::string& lambda, const std::string& prep);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct AssumptionCheck {
    std::string assumption;  // "psi_anomic", "pip", "pip_ps", "roi"
    Verdict verdict = Verdict::NotApplicable;
    std::vector<std::string> violations;
};

struct ComplianceReport {
    std::vector<AssumptionCheck> checks;
    const AssumptionCheck* find(const std::string& assumption) const;
};

// Runs the requested checks. The ROI check needs the interferometer contexts
// (psi_in with M1, M1;M2[chi], M0;M2[chi] and/or psi_0 with M2[chi] for
// chi in {0, pi}); PIP-PS needs product preparations "n⊗m" over ontic states
// "u⊗v". Requesting a check the model cannot support throws FragmentMismatch.
ComplianceReport check_assumptions(const OntologicalModel& model, const AssumptionSet& which);

// True iff every pair of distinct (PIP) preparations has disjoint supports.
bool is_psi_ontic(const OntologicalModel& model);

}  // namespace ontic
