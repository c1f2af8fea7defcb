#include "ontic/ontology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"

namespace ontic {

namespace {

std::string where(const ResponseTable& t) {
    return "response table '" + t.context + "'" + (t.preparation ? " [" + *t.preparation + "]" : std::string());
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

OntologicalModel::OntologicalModel(std::vector<std::string> ontic_states, std::vector<EpistemicState> epistemics,
                                   std::vector<ResponseTable> responses, AssumptionSet flags)
    : ontic_states_(std::move(ontic_states)),
      epistemics_(std::move(epistemics)),
      responses_(std::move(responses)),
      flags_(flags) {
    if (ontic_states_.empty()) throw InvalidConfig("ontic space is empty");
    std::set<std::string> names(ontic_states_.begin(), ontic_states_.end());
    if (names.size() != ontic_states_.size()) throw InvalidConfig("ontic state identifiers are not distinct");
    const std::size_t n = ontic_states_.size();

    std::set<std::pair<std::string, std::string>> seen_eps;
    for (const auto& e : epistemics_) {
        if (!seen_eps.emplace(e.preparation, e.context.value_or("")).second) {
            throw InvalidConfig("duplicate epistemic state for '" + e.preparation + "'");
        }
        if (e.weights.size() != n) throw InvalidConfig("epistemic state '" + e.preparation + "' has wrong length");
        Rational total = 0;
        for (const auto& w : e.weights) {
            if (w < 0) throw InvalidConfig("epistemic state '" + e.preparation + "' has a negative weight");
            total += w;
        }
        if (total != 1) throw InvalidConfig("epistemic state '" + e.preparation + "' sums to " + to_string(total));
    }

    std::set<std::pair<std::string, std::string>> seen_tables;
    for (const auto& t : responses_) {
        if (!seen_tables.emplace(t.context, t.preparation.value_or("")).second) {
            throw InvalidConfig("duplicate " + where(t));
        }
        if (flags_.psi_anomic && t.preparation) {
            throw InvalidConfig("model flagged psi-anomic has preparation-indexed " + where(t));
        }
        std::set<std::string> outs(t.outcomes.begin(), t.outcomes.end());
        if (outs.size() != t.outcomes.size() || t.outcomes.empty()) {
            throw InvalidConfig(where(t) + " has empty or repeated outcomes");
        }
        if (t.entries.size() != n) throw InvalidConfig(where(t) + " has wrong number of rows");
        for (std::size_t l = 0; l < n; ++l) {
            const auto& row = t.entries[l];
            if (row.size() != t.outcomes.size()) throw InvalidConfig(where(t) + " row has wrong length");
            Rational total = 0;
            for (const auto& p : row) {
                if (p < 0) throw InvalidConfig(where(t) + " has a negative entry");
                total += p;
            }
            if (total != 1) {
                throw InvalidConfig(where(t) + " row '" + ontic_states_[l] + "' sums to " + to_string(total));
            }
        }
    }
}

std::size_t OntologicalModel::ontic_index(const std::string& lambda) const {
    auto it = std::find(ontic_states_.begin(), ontic_states_.end(), lambda);
    if (it == ontic_states_.end()) throw UnknownLabel("unknown ontic state '" + lambda + "'");
    return static_cast<std::size_t>(it - ontic_states_.begin());
}

std::vector<std::string> OntologicalModel::preparations() const {
    std::vector<std::string> out;
    for (const auto& e : epistemics_) {
        if (std::find(out.begin(), out.end(), e.preparation) == out.end()) out.push_back(e.preparation);
    }
    return out;
}

std::vector<std::string> OntologicalModel::contexts() const {
    std::vector<std::string> out;
    for (const auto& t : responses_) {
        if (std::find(out.begin(), out.end(), t.context) == out.end()) out.push_back(t.context);
    }
    return out;
}

bool OntologicalModel::has_preparation(const std::string& prep) const {
    return std::any_of(epistemics_.begin(), epistemics_.end(),
                       [&](const EpistemicState& e) { return e.preparation == prep; });
}

const EpistemicState& OntologicalModel::epistemic(const std::string& prep, const std::string& context) const {
    for (const auto& e : epistemics_) {
        if (e.preparation == prep && e.context && *e.context == context) return e;
    }
    return epistemic(prep);
}

const EpistemicState& OntologicalModel::epistemic(const std::string& prep) const {
    for (const auto& e : epistemics_) {
        if (e.preparation == prep && !e.context) return e;
    }
    throw UnknownLabel("unknown preparation '" + prep + "'");
}

const ResponseTable* OntologicalModel::find_response(const std::string& context, const std::string& prep) const {
    const ResponseTable* shared = nullptr;
    for (const auto& t : responses_) {
        if (t.context != context) continue;
        if (t.preparation && *t.preparation == prep) return &t;
        if (!t.preparation) shared = &t;
    }
    return shared;
}

const ResponseTable& OntologicalModel::response(const std::string& context, const std::string& prep) const {
    if (const auto* t = find_response(context, prep)) return *t;
    throw UnknownLabel("no response table for context '" + context + "'" + (prep.empty() ? "" : " and preparation '" + prep + "'"));
}

const Rational& Distribution::at(const std::string& outcome) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i] == outcome) return probs[i];
    }
    throw UnknownLabel("outcome '" + outcome + "' not in distribution");
}

Distribution predicted_statistics(const OntologicalModel& model, const std::string& prep, const std::string& context) {
    const EpistemicState& eps = model.epistemic(prep, context);
    const ResponseTable& table = model.response(context, prep);
    Distribution d{table.outcomes, std::vector<Rational>(table.outcomes.size(), Rational(0))};
    for (std::size_t l = 0; l < eps.weights.size(); ++l) {
        if (eps.weights[l] == 0) continue;
        for (std::size_t o = 0; o < table.outcomes.size(); ++o) d.probs[o] += table.entries[l][o] * eps.weights[l];
    }
    return d;
}

ReproductionReport reproduces(const OntologicalModel& model, const Fragment& fragment, const Rational& tol) {
    ReproductionReport report;
    report.reproduces = true;
    report.max_deviation = 0;
    for (const auto& entry : fragment) {
        EntryDeviation dev{entry.preparation, entry.context, 0, false};
        if (!model.has_preparation(entry.preparation) || !model.find_response(entry.context, entry.preparation)) {
            dev.missing = true;
            report.reproduces = false;
            report.entries.push_back(dev);
            continue;
        }
        Distribution predicted = predicted_statistics(model, entry.preparation, entry.context);
        for (std::size_t o = 0; o < entry.quantum.outcomes.size(); ++o) {
            const std::string& outcome = entry.quantum.outcomes[o];
            auto it = std::find(predicted.outcomes.begin(), predicted.outcomes.end(), outcome);
            Rational p = it == predicted.outcomes.end() ? Rational(0) : predicted.probs[static_cast<std::size_t>(it - predicted.outcomes.begin())];
            dev.deviation = std::max(dev.deviation, abs_q(p - entry.quantum.probs[o]));
        }
        // Outcomes the model predicts but the fragment does not list count against it too.
        for (std::size_t o = 0; o < predicted.outcomes.size(); ++o) {
            if (std::find(entry.quantum.outcomes.begin(), entry.quantum.outcomes.end(), predicted.outcomes[o]) ==
                entry.quantum.outcomes.end()) {
                dev.deviation = std::max(dev.deviation, abs_q(predicted.probs[o]));
            }
        }
        report.max_deviation = std::max(report.max_deviation, dev.deviation);
        if (dev.deviation > tol) report.reproduces = false;
        report.entries.push_back(dev);
    }
    return report;
}

Overlap support_overlap(const OntologicalModel& model, const std::string& prep1, const std::string& prep2) {
    const auto& p = model.epistemic(prep1).weights;
    const auto& q = model.epistemic(prep2).weights;
    Overlap out{0, true};
    for (std::size_t l = 0; l < p.size(); ++l) {
        out.mass += std::min(p[l], q[l]);
        if (p[l] * q[l] != 0) out.disjoint = false;
    }
    return out;
}

Rational conditional_response(const OntologicalModel& model, const std::string& second, const std::string& first,
                              const std::string& beta, const std::string& alpha, const std::string& lambda,
                              const std::string& prep) {
    std::size_t l = model.ontic_index(lambda);
    const ResponseTable& t1 = model.response(first, prep);
    const ResponseTable& t2 = model.response(second, prep);
    auto idx = [](const ResponseTable& t, const std::string& o) {
        auto it = std::find(t.outcomes.begin(), t.outcomes.end(), o);
        if (it == t.outcomes.end()) throw UnknownLabel("outcome '" + o + "' not in context '" + t.context + "'");
        return static_cast<std::size_t>(it - t.outcomes.begin());
    };
    const Rational& denom = t1.entries[l][idx(t1, alpha)];
    if (denom == 0) {
        throw UndefinedConditional("P(" + alpha + " | " + first + ", " + lambda +
                                   ") = 0: conditional response undefined outside the relevant subset");
    }
    return t2.entries[l][idx(t2, beta + "," + alpha)] / denom;
}

std::string lifted_label(const std::string& lambda, const std::string& prep) { return lambda + "|" + prep; }

OntologicalModel lift_model(const OntologicalModel& model) {
    const auto preps = model.preparations();
    const auto& lambdas = model.ontic_states();

    std::vector<std::string> mus;
    for (const auto& tau : preps) {
        for (const auto& lambda : lambdas) mus.push_back(lifted_label(lambda, tau));
    }

    std::vector<EpistemicState> eps;
    for (const auto& e : model.epistemics()) {
        EpistemicState lifted{e.preparation, e.context, std::vector<Rational>(mus.size(), Rational(0))};
        auto tau = static_cast<std::size_t>(std::find(preps.begin(), preps.end(), e.preparation) - preps.begin());
        for (std::size_t l = 0; l < lambdas.size(); ++l) lifted.weights[tau * lambdas.size() + l] = e.weights[l];
        eps.push_back(std::move(lifted));
    }

    std::vector<ResponseTable> tables;
    for (const auto& context : model.contexts()) {
        std::vector<std::string> outcomes;
        for (const auto& t : model.responses()) {
            if (t.context != context) continue;
            if (outcomes.empty()) {
                outcomes = t.outcomes;
            } else if (outcomes != t.outcomes) {
                throw InvalidConfig("context '" + context + "' has inconsistent outcome sets");
            }
        }
        ResponseTable lifted{context, std::nullopt, outcomes, {}};
        const Rational uniform(1, static_cast<unsigned long>(outcomes.size()));
        for (const auto& tau : preps) {
            const ResponseTable* parent = model.find_response(context, tau);
            for (std::size_t l = 0; l < lambdas.size(); ++l) {
                if (parent) {
                    lifted.entries.push_back(parent->entries[l]);
                } else {
                    lifted.entries.emplace_back(outcomes.size(), uniform);
                }
            }
        }
        tables.push_back(std::move(lifted));
    }

    AssumptionSet flags = model.flags();
    flags.psi_anomic = true;
    OntologicalModel out(std::move(mus), std::move(eps), std::move(tables), flags);
    out.a2 = model.a2;
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

const AssumptionCheck* ComplianceReport::find(const std::string& assumption) const {
    for (const auto& c : checks) {
        if (c.assumption == assumption) return &c;
    }
    return nullptr;
}

namespace {

AssumptionCheck check_psi_anomic(const OntologicalModel& model) {
    AssumptionCheck c{"psi_anomic", Verdict::Pass, {}};
    for (const auto& t : model.responses()) {
        if (t.preparation) c.violations.push_back("response for '" + t.context + "' depends on preparation '" + *t.preparation + "'");
    }
    if (!c.violations.empty()) c.verdict = Verdict::Fail;
    return c;
}

AssumptionCheck check_pip(const OntologicalModel& model) {
    AssumptionCheck c{"pip", Verdict::Pass, {}};
    for (const auto& e : model.epistemics()) {
        if (e.context) c.violations.push_back("epistemic state of '" + e.preparation + "' depends on measurement '" + *e.context + "'");
    }
    if (!c.violations.empty()) c.verdict = Verdict::Fail;
    return c;
}

constexpr std::string_view kTensor = "⊗";

std::optional<std::pair<std::string, std::string>> split_product(const std::string& s) {
    auto pos = s.find(kTensor);
    if (pos == std::string::npos) return std::nullopt;
    return std::make_pair(s.substr(0, pos), s.substr(pos + kTensor.size()));
}

AssumptionCheck check_pip_ps(const OntologicalModel& model) {
    std::vector<std::pair<std::string, std::string>> lambda_parts;
    for (const auto& l : model.ontic_states()) {
        auto parts = split_product(l);
        if (!parts) throw FragmentMismatch("PIP-PS needs product ontic states 'u⊗v'; got '" + l + "'");
        lambda_parts.push_back(*parts);
    }
    std::vector<std::string> as;
    std::vector<std::string> bs;
    for (const auto& [a, b] : lambda_parts) {
        if (std::find(as.begin(), as.end(), a) == as.end()) as.push_back(a);
        if (std::find(bs.begin(), bs.end(), b) == bs.end()) bs.push_back(b);
    }

    AssumptionCheck c{"pip_ps", Verdict::Pass, {}};
    std::map<std::string, std::map<std::string, Rational>> marg_a;  // first factor -> marginal on A
    std::map<std::string, std::map<std::string, Rational>> marg_b;
    bool any_product = false;
    for (const auto& e : model.epistemics()) {
        if (e.context) continue;
        auto factors = split_product(e.preparation);
        if (!factors) continue;
        any_product = true;
        std::map<std::string, Rational> pa;
        std::map<std::string, Rational> pb;
        std::map<std::pair<std::string, std::string>, Rational> joint;
        for (std::size_t l = 0; l < e.weights.size(); ++l) {
            pa[lambda_parts[l].first] += e.weights[l];
            pb[lambda_parts[l].second] += e.weights[l];
            joint[lambda_parts[l]] += e.weights[l];
        }
        for (const auto& a : as) {
            for (const auto& b : bs) {
                if (joint[{a, b}] != pa[a] * pb[b]) {
                    c.violations.push_back("P_" + e.preparation + "(" + a + "⊗" + b + ") does not factorize");
                }
            }
        }
        if (auto it = marg_a.find(factors->first); it != marg_a.end() && it->second != pa) {
            c.violations.push_back("marginal of '" + factors->first + "' on A depends on the partner preparation");
        }
        if (auto it = marg_b.find(factors->second); it != marg_b.end() && it->second != pb) {
            c.violations.push_back("marginal of '" + factors->second + "' on B depends on the partner preparation");
        }
        marg_a.emplace(factors->first, pa);
        marg_b.emplace(factors->second, pb);
    }
    if (!any_product) throw FragmentMismatch("PIP-PS needs product preparations 'n⊗m'");
    if (!c.violations.empty()) c.verdict = Verdict::Fail;
    return c;
}

const Rational& entry(const ResponseTable& t, std::size_t l, const std::string& outcome) {
    auto it = std::find(t.outcomes.begin(), t.outcomes.end(), outcome);
    if (it == t.outcomes.end()) throw FragmentMismatch("context '" + t.context + "' lacks outcome '" + outcome + "'");
    return t.entries[l][static_cast<std::size_t>(it - t.outcomes.begin())];
}

AssumptionCheck check_roi(const OntologicalModel& model) {
    using namespace hardy;
    AssumptionCheck c{"roi", Verdict::Pass, {}};
    const auto phases = default_phases();
    bool evaluated = false;

    auto has_all = [&](const std::string& prep, const std::vector<std::string>& contexts) {
        if (!model.has_preparation(prep)) return false;
        return std::all_of(contexts.begin(), contexts.end(),
                           [&](const std::string& ctx) { return model.find_response(ctx, prep) != nullptr; });
    };

    std::vector<std::string> blocked_ctx{kM1};
    for (const auto& chi : phases) {
        blocked_ctx.push_back(m1_m2(chi));
        blocked_ctx.push_back(m0_m2(chi));
    }
    if (has_all(kPsiIn, blocked_ctx)) {
        evaluated = true;
        const auto& eps = model.epistemic(kPsiIn);
        const ResponseTable& which = model.response(kM1, kPsiIn);
        const ResponseTable& blocked0 = model.response(m1_m2(phases[0]), kPsiIn);
        for (std::size_t l = 0; l < eps.weights.size(); ++l) {
            if (eps.weights[l] == 0) continue;
            const std::string& lambda = model.ontic_states()[l];
            // Blocked-path responses carry no chi index.
            for (const auto& chi : phases.subspan(1)) {
                const ResponseTable& other = model.response(m1_m2(chi), kPsiIn);
                if (other.entries[l] != blocked0.entries[l]) {
                    c.violations.push_back(lambda + ": blocked response at chi=" + chi.label() + " differs from chi=" + phases[0].label());
                }
            }
            // Ties to the unblocked run, on the subset that reaches the prepared mode.
            if (entry(which, l, kYes) == 0) continue;
            for (const auto& chi : phases) {
                const ResponseTable& open = model.response(m0_m2(chi), kPsiIn);
                for (const std::string port : {"4", "3"}) {
                    if (entry(blocked0, l, joint(port, kYes)) != entry(open, l, port)) {
                        c.violations.push_back(lambda + ": P(" + port + ",Yes|blocked) = " +
                                               to_string(entry(blocked0, l, joint(port, kYes))) + " but P(" + port + "|" +
                                               m0_m2(chi) + ") = " + to_string(entry(open, l, port)));
                    }
                }
            }
        }
    }

    std::vector<std::string> zero_ctx;
    for (const auto& chi : phases) zero_ctx.push_back(m2(chi));
    if (has_all(kPsiZero, zero_ctx)) {
        evaluated = true;
        const auto& eps = model.epistemic(kPsiZero);
        const ResponseTable& base = model.response(m2(phases[0]), kPsiZero);
        for (std::size_t l = 0; l < eps.weights.size(); ++l) {
            if (eps.weights[l] == 0) continue;
            for (const auto& chi : phases.subspan(1)) {
                if (model.response(m2(chi), kPsiZero).entries[l] != base.entries[l]) {
                    c.violations.push_back(model.ontic_states()[l] + ": response on the support of psi_0 depends on chi");
                }
            }
        }
    }

    if (!evaluated) throw FragmentMismatch("ROI check needs the interferometer contexts for psi_in or psi_0");
    if (!c.violations.empty()) c.verdict = Verdict::Fail;
    return c;
}

}  // namespace

ComplianceReport check_assumptions(const OntologicalModel& model, const AssumptionSet& which) {
    ComplianceReport report;
    if (which.psi_anomic) report.checks.push_back(check_psi_anomic(model));
    if (which.pip) report.checks.push_back(check_pip(model));
    if (which.pip_ps) report.checks.push_back(check_pip_ps(model));
    if (which.roi) report.checks.push_back(check_roi(model));
    return report;
}

bool is_psi_ontic(const OntologicalModel& model) {
    const auto preps = model.preparations();
    for (std::size_t i = 0; i < preps.size(); ++i) {
        for (std::size_t j = i + 1; j < preps.size(); ++j) {
            if (!support_overlap(model, preps[i], preps[j]).disjoint) return false;
        }
    }
    return true;
}

}  // namespace ontic
