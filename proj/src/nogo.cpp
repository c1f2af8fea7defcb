#include "ontic/nogo.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"
#include "ontic/interferometer.hpp"

namespace ontic {

using namespace hardy;

std::vector<std::string> relaxed_names(const AssumptionSet& a) {
    std::vector<std::string> out;
    if (!a.psi_anomic) out.push_back("psi_anomic");
    if (!a.pip) out.push_back("pip");
    if (!a.pip_ps) out.push_back("pip_ps");
    if (!a.roi) out.push_back("roi");
    return out;
}

AssumptionSet relax(const std::vector<std::string>& names) {
    AssumptionSet a = AssumptionSet::all();
    for (const auto& n : names) {
        if (n == "psi_anomic") {
            a.psi_anomic = false;
        } else if (n == "pip") {
            a.pip = false;
        } else if (n == "pip_ps") {
            a.pip_ps = false;
        } else if (n == "roi") {
            a.roi = false;
        } else {
            throw InvalidConfig("unknown assumption '" + n + "' (expected psi_anomic, pip, pip_ps or roi)");
        }
    }
    return a;
}

namespace {

std::vector<Rational> aligned(const Distribution& d, const std::vector<std::string>& outcomes) {
    std::vector<Rational> out;
    for (const auto& o : outcomes) out.push_back(d.at(o));
    return out;
}

std::vector<std::string> yes_outcomes() {
    std::vector<std::string> out;
    for (const auto& beta : {std::string("3"), std::string("4"), std::string("2"), kStopped}) out.push_back(joint(beta, kYes));
    return out;
}

}  // namespace

Scenario hroi2_scenario(const Rational& a2) {
    const auto phases = default_phases();
    Scenario sc;
    sc.name = "hroi2";
    sc.preparations = {kPsiIn};
    sc.contexts.push_back({kM1, which_outcomes()});
    for (const auto& chi : phases) sc.contexts.push_back({m1_m2(chi), joint_outcomes()});
    for (const auto& chi : phases) sc.contexts.push_back({m0_m2(chi), port_outcomes()});

    for (const auto& e : blocked_fragment(a2, phases)) {
        std::string tag = e.context == kM1                ? "which-path-statistics"
                          : e.context.starts_with("M1;") ? "blocked-joint-statistics"
                                                          : "unblocked-statistics";
        sc.statistics.push_back({e.preparation, e.context, aligned(e.quantum, sc.contexts[sc.context_index(e.context)].outcomes), tag});
    }

    const std::string blocked0 = m1_m2(phases[0]);
    for (const auto& chi : phases) {
        sc.ties.push_back({"sequential-marginal", TieKind::Sequential, false, std::nullopt,
                           Event{m1_m2(chi), yes_outcomes()}, Event{kM1, {kYes}}, std::nullopt});
    }
    for (const auto& chi : phases.subspan(1)) {
        for (const auto& o : joint_outcomes()) {
            sc.ties.push_back({"roi-blocked-chi-independence", TieKind::Roi, false, std::nullopt, Event{blocked0, {o}},
                               Event{m1_m2(chi), {o}}, std::nullopt});
        }
    }
    for (const auto& chi : phases) {
        for (const std::string port : {"4", "3"}) {
            sc.ties.push_back({"roi-tie-port" + port, TieKind::Roi, true, Event{kM1, {kYes}},
                               Event{blocked0, {joint(port, kYes)}}, Event{m0_m2(chi), {port}}, std::nullopt});
        }
    }
    return sc;
}

Scenario hroi_scenario(const Rational& a2) {
    const auto phases = default_phases();
    Scenario sc;
    sc.name = "hroi";
    sc.preparations = {kPsiPlus, kPsiZero};
    for (const auto& chi : phases) sc.contexts.push_back({m2(chi), port_outcomes()});
    for (const auto& e : overlap_fragment(a2, phases)) {
        sc.statistics.push_back({e.preparation, e.context, aligned(e.quantum, port_outcomes()),
                                 e.preparation == kPsiPlus ? "psi-plus-statistics" : "psi-0-statistics"});
    }
    for (const auto& chi : phases.subspan(1)) {
        for (const auto& o : port_outcomes()) {
            sc.ties.push_back({"roi-psi0-chi-independence", TieKind::Roi, false, std::nullopt, Event{m2(phases[0]), {o}},
                               Event{m2(chi), {o}}, kPsiZero});
        }
    }
    sc.overlap = OverlapObjective{kPsiPlus, kPsiZero};
    return sc;
}

ConstraintSystem compile_hroi2(const Rational& a2, const AssumptionSet& assumptions) {
    CircuitConfig::make(a2);
    return compile(hroi2_scenario(a2), assumptions).system;
}

// ---------------------------------------------------------------------------
// Independent oracle route.

namespace {

struct OracleTie {
    std::optional<std::pair<std::size_t, std::vector<std::string>>> guard;
    std::pair<std::size_t, std::vector<std::string>> lhs;
    std::pair<std::size_t, std::vector<std::string>> rhs;
    std::size_t last = 0;
};

using Choice = std::vector<std::size_t>;

std::vector<Choice> backtrack(const Scenario& sc, const std::vector<OracleTie>& ties, std::size_t cap) {
    const std::size_t nc = sc.contexts.size();
    auto in = [&](const Choice& s, const std::pair<std::size_t, std::vector<std::string>>& ev) {
        const std::string& o = sc.contexts[ev.first].outcomes[s[ev.first]];
        return std::find(ev.second.begin(), ev.second.end(), o) != ev.second.end();
    };
    std::vector<Choice> out;
    Choice s(nc, 0);
    std::function<void(std::size_t)> go = [&](std::size_t c) {
        if (c == nc) {
            if (out.size() == cap) throw SizeCapExceeded("oracle: more than " + std::to_string(cap) + " admissible assignments");
            out.push_back(s);
            return;
        }
        for (std::size_t o = 0; o < sc.contexts[c].outcomes.size(); ++o) {
            s[c] = o;
            bool ok = true;
            for (const auto& t : ties) {
                if (t.last != c) continue;
                if (t.guard && !in(s, *t.guard)) continue;
                if (in(s, t.lhs) != in(s, t.rhs)) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(c + 1);
        }
    };
    go(0);
    return out;
}

}  // namespace

FeasibilityResult enumerate_oracle(const Scenario& sc, const AssumptionSet& assumptions, const OracleOptions& opts) {
    constexpr std::size_t kCap = 1'000'000;
    const std::size_t np = sc.preparations.size();
    const std::size_t nc = sc.contexts.size();
    auto ctx = [&](const std::string& name) {
        for (std::size_t c = 0; c < nc; ++c) {
            if (sc.contexts[c].name == name) return c;
        }
        throw UnknownLabel("oracle: unknown context '" + name + "'");
    };
    auto prep = [&](const std::string& name) {
        auto it = std::find(sc.preparations.begin(), sc.preparations.end(), name);
        if (it == sc.preparations.end()) throw UnknownLabel("oracle: unknown preparation '" + name + "'");
        return static_cast<std::size_t>(it - sc.preparations.begin());
    };

    // Per preparation: assignments obeying the active ties that apply to it.
    // Under PIP one weight vector serves every context, so assignments
    // answering an outcome the preparation never produces are dropped.
    const bool prune = assumptions.pip;
    std::vector<std::vector<Choice>> lists(np);
    for (std::size_t p = 0; p < np; ++p) {
        std::vector<OracleTie> ties;
        for (const auto& t : sc.ties) {
            if (t.kind == TieKind::Roi && !assumptions.roi) continue;
            if (t.requires_anomic && !assumptions.psi_anomic) continue;
            if (t.preparation && *t.preparation != sc.preparations[p]) continue;
            OracleTie ot{std::nullopt, {ctx(t.lhs.context), t.lhs.outcomes}, {ctx(t.rhs.context), t.rhs.outcomes}, 0};
            ot.last = std::max(ot.lhs.first, ot.rhs.first);
            if (t.guard) {
                ot.guard = std::make_pair(ctx(t.guard->context), t.guard->outcomes);
                ot.last = std::max(ot.last, ot.guard->first);
            }
            ties.push_back(std::move(ot));
        }
        for (auto& s : backtrack(sc, ties, kCap)) {
            bool possible = true;
            for (const auto& st : sc.statistics) {
                if (prune && prep(st.preparation) == p && st.probs.at(s[ctx(st.context)]) == 0) possible = false;
            }
            if (possible) lists[p].push_back(std::move(s));
        }
    }

    // Ontic points: shared assignments, or one assignment per preparation.
    const bool tuples = !assumptions.psi_anomic && np > 1;
    std::vector<std::vector<Choice>> points;  // [point][p] (size 1 if shared)
    std::vector<std::vector<char>> alive;     // [point][p]
    if (!tuples) {
        std::map<Choice, std::size_t> index;
        for (std::size_t p = 0; p < np; ++p) {
            for (const auto& s : lists[p]) {
                auto [it, fresh] = index.emplace(s, points.size());
                if (fresh) {
                    points.push_back({s});
                    alive.emplace_back(np, 0);
                }
                alive[it->second][p] = 1;
            }
        }
    } else {
        std::vector<std::size_t> at(np, 0);
        bool empty = std::any_of(lists.begin(), lists.end(), [](const auto& l) { return l.empty(); });
        while (!empty) {
            std::vector<Choice> pt;
            for (std::size_t p = 0; p < np; ++p) pt.push_back(lists[p][at[p]]);
            if (points.size() == kCap) throw SizeCapExceeded("oracle: too many tuple points");
            points.push_back(std::move(pt));
            alive.emplace_back(np, 1);
            std::size_t p = np;
            while (p > 0) {
                --p;
                if (++at[p] < lists[p].size()) break;
                at[p] = 0;
                if (p == 0) empty = true;
            }
        }
    }
    auto answer = [&](std::size_t i, std::size_t p, std::size_t c) { return points[i][tuples ? p : 0][c]; };

    std::optional<std::pair<std::size_t, std::size_t>> overlap;
    if (sc.overlap) {
        if (!assumptions.pip) throw InvalidConfig("the overlap objective needs measurement-independent epistemic states (PIP)");
        overlap = std::make_pair(prep(sc.overlap->first), prep(sc.overlap->second));
    }

    // weight of (p, slot, point) = sum of these variables; with an overlap
    // objective the two compared weights are m + u and m + v.
    const std::size_t slots = assumptions.pip ? 1 : nc;
    ConstraintSystem cs;
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> weight(
        np, std::vector<std::vector<std::vector<std::size_t>>>(slots, std::vector<std::vector<std::size_t>>(points.size())));
    std::vector<Term> objective;
    std::vector<std::vector<char>> measured(np, std::vector<char>(nc, 0));
    for (const auto& st : sc.statistics) measured[prep(st.preparation)][ctx(st.context)] = 1;

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (overlap && alive[i][overlap->first] && alive[i][overlap->second]) {
            auto m = cs.add_variable("m" + std::to_string(i));
            weight[overlap->first][0][i].push_back(m);
            weight[overlap->second][0][i].push_back(m);
            objective.push_back({m, 1});
        }
        for (std::size_t p = 0; p < np; ++p) {
            if (!alive[i][p]) continue;
            for (std::size_t slot = 0; slot < slots; ++slot) {
                if (!assumptions.pip && !measured[p][slot]) continue;
                weight[p][slot][i].push_back(cs.add_variable("w" + std::to_string(p) + "." + std::to_string(slot) + "." + std::to_string(i)));
            }
        }
    }
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t slot = 0; slot < slots; ++slot) {
            if (!assumptions.pip && !measured[p][slot]) continue;
            std::vector<Term> norm;
            for (const auto& vars : weight[p][slot]) {
                for (auto v : vars) norm.push_back({v, 1});
            }
            cs.add_row(Row{std::move(norm), Relation::Equal, 1, "normalization", sc.preparations[p]});
        }
    }
    for (const auto& st : sc.statistics) {
        const std::size_t p = prep(st.preparation);
        const std::size_t c = ctx(st.context);
        const std::size_t slot = assumptions.pip ? 0 : c;
        for (std::size_t o = 0; o < st.probs.size(); ++o) {
            if (prune && st.probs[o] == 0) continue;
            std::vector<Term> terms;
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (!alive[i][p] || answer(i, p, c) != o) continue;
                for (auto v : weight[p][slot][i]) terms.push_back({v, 1});
            }
            cs.add_row(Row{std::move(terms), Relation::Equal, st.probs[o], st.tag, st.context});
        }
    }
    if (overlap) cs.set_objective(std::move(objective));
    return enumerate_oracle(cs, opts);
}

// ---------------------------------------------------------------------------

OntologicalModel nomic_counterexample(const Rational& a2, CounterexampleSpace space) {
    CircuitConfig cfg = CircuitConfig::make(a2);
    const bool arms = space == CounterexampleSpace::ArmLabel;
    std::vector<std::string> lambdas = arms ? std::vector<std::string>{"arm0", "arm1"} : std::vector<std::string>{"lambda"};

    auto weights = [&](const std::string& prep) {
        if (!arms) return std::vector<Rational>{1};
        if (prep == kPsiZero) return std::vector<Rational>{1, 0};
        return std::vector<Rational>{cfg.a2, cfg.b2()};
    };
    std::vector<EpistemicState> eps;
    for (const auto& p : {kPsiIn, kPsiPlus, kPsiZero}) eps.push_back({p, std::nullopt, weights(p)});

    std::vector<ResponseTable> tables;
    for (const auto& e : fragment(a2)) {
        ResponseTable t{e.context, e.preparation, e.quantum.outcomes, {}};
        const auto& q = e.quantum.probs;
        if (!arms) {
            t.entries.push_back(q);
        } else if (e.preparation == kPsiIn && e.context == kM1) {
            t.entries = {{1, 0}, {0, 1}};
        } else if (e.preparation == kPsiIn && e.context.starts_with("M1;")) {
            // arm0 carries the which-path record Yes, arm1 the record No.
            std::vector<Rational> yes(q.size(), Rational(0));
            std::vector<Rational> no(q.size(), Rational(0));
            for (std::size_t o = 0; o < q.size(); ++o) {
                if (e.quantum.outcomes[o].ends_with("," + kYes)) {
                    yes[o] = q[o] / cfg.a2;
                } else {
                    no[o] = q[o] / cfg.b2();
                }
            }
            t.entries = {yes, no};
        } else {
            t.entries = {q, q};
        }
        tables.push_back(std::move(t));
    }
    AssumptionSet flags{false, true, false, false};
    OntologicalModel model(std::move(lambdas), std::move(eps), std::move(tables), flags);
    model.a2 = cfg.a2;
    return model;
}

OntologicalModel deterministic_decomposition(const OntologicalModel& model) {
    for (const auto& t : model.responses()) {
        if (t.preparation) throw PreconditionError("deterministic decomposition needs preparation-independent responses");
    }
    constexpr std::size_t kCap = 1'000'000;
    const auto contexts = model.contexts();
    std::vector<const ResponseTable*> tables;
    for (const auto& c : contexts) tables.push_back(&model.response(c, ""));

    std::vector<std::string> labels;
    std::vector<std::size_t> origin;
    std::vector<Rational> factor;
    std::vector<std::vector<std::size_t>> choice;
    for (std::size_t l = 0; l < model.ontic_states().size(); ++l) {
        std::vector<std::size_t> s(contexts.size(), 0);
        std::function<void(std::size_t, const Rational&)> go = [&](std::size_t c, const Rational& f) {
            if (c == contexts.size()) {
                if (labels.size() == kCap) throw SizeCapExceeded("deterministic decomposition exceeds the point cap");
                std::string label = model.ontic_states()[l];
                for (std::size_t k = 0; k < s.size(); ++k) label += (k == 0 ? "|" : ",") + tables[k]->outcomes[s[k]];
                labels.push_back(std::move(label));
                origin.push_back(l);
                factor.push_back(f);
                choice.push_back(s);
                return;
            }
            for (std::size_t o = 0; o < tables[c]->outcomes.size(); ++o) {
                const Rational& p = tables[c]->entries[l][o];
                if (p == 0) continue;
                s[c] = o;
                go(c + 1, f * p);
            }
        };
        go(0, Rational(1));
    }

    std::vector<EpistemicState> eps;
    for (const auto& e : model.epistemics()) {
        EpistemicState d{e.preparation, e.context, {}};
        for (std::size_t k = 0; k < labels.size(); ++k) d.weights.push_back(e.weights[origin[k]] * factor[k]);
        eps.push_back(std::move(d));
    }
    std::vector<ResponseTable> out;
    for (std::size_t c = 0; c < contexts.size(); ++c) {
        ResponseTable t{contexts[c], std::nullopt, tables[c]->outcomes, {}};
        for (std::size_t k = 0; k < labels.size(); ++k) {
            std::vector<Rational> row(t.outcomes.size(), Rational(0));
            row[choice[k][c]] = 1;
            t.entries.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    OntologicalModel result(std::move(labels), std::move(eps), std::move(out), model.flags());
    result.a2 = model.a2;
    return result;
}

// ---------------------------------------------------------------------------
// Theorem runs.

namespace {

constexpr const char* kPort3Note =
    "The port-3 ROI tie compares the blocked run with the unblocked run M0;M2[chi]; read literally with M1 on both "
    "sides it would tie a response to itself and carry no content.";

std::vector<std::string> phase_labels() {
    std::vector<std::string> out;
    for (const auto& chi : default_phases()) out.push_back(chi.label());
    return out;
}

void record_program(TheoremReport& r, const CompiledScenario& cs, const FeasibilityResult& res) {
    r.admissible_points = cs.points.size();
    for (const auto& row : cs.system.rows()) {
        r.row_labels.push_back(row.label);
        r.row_tags.push_back(row.tag);
    }
    r.certificate = res.certificate;
    r.dual = res.dual;
    const auto& names = cs.system.variable_names();
    for (std::size_t j = 0; j < res.witness.size(); ++j) {
        if (res.witness[j] != 0) r.witness.emplace_back(names[j], res.witness[j]);
    }
    if (res.status == LpStatus::Feasible) {
        r.witness_model = model_from_witness(cs, res.witness);
        r.witness_model->a2 = r.a2;
        r.witness_reproduces = reproduces(*r.witness_model, cs.scenario.fragment()).reproduces;
    }
}

std::string certificate_summary(const TheoremReport& r) {
    std::size_t used = 0;
    for (const auto& y : r.certificate->multipliers) {
        if (y != 0) ++used;
    }
    return "a combination of " + std::to_string(used) + " of " + std::to_string(r.row_labels.size()) +
           " rows yields g.x >= " + to_string(r.certificate->bound) +
           " with every g_j <= 0, impossible for nonnegative weights; the certificate re-verifies exactly";
}

}  // namespace

TheoremReport check_hroi2(const Rational& a2, const AssumptionSet& assumptions) {
    CircuitConfig cfg = CircuitConfig::make(a2);
    const Scenario sc = hroi2_scenario(a2);
    const CompiledScenario cs = compile(sc, assumptions);
    const FeasibilityResult res = solve(cs.system);
    const FeasibilityResult orc = enumerate_oracle(sc, assumptions);

    TheoremReport r;
    r.theorem = "HROI2";
    r.a2 = cfg.a2;
    r.chis = phase_labels();
    r.relaxed = relaxed_names(assumptions);
    r.status = to_string(res.status);
    const bool all = assumptions.psi_anomic && assumptions.pip && assumptions.roi;
    r.expected = res.status == (all ? LpStatus::Infeasible : LpStatus::Feasible);
    r.oracle_status = to_string(orc.status);
    r.oracle_agrees = orc.status == res.status;
    record_program(r, cs, res);

    const auto phases = default_phases();
    const std::string c0 = m0_m2(phases[0]);
    const std::string cpi = m0_m2(phases[1]);
    const std::string b0 = m1_m2(phases[0]);
    const Rational half = cfg.a2 / 2;
    auto& tr = r.trace;
    tr.push_back({"which-path-statistics", "P(Yes | M1) = " + to_string(cfg.a2) + ", P(No | M1) = " + to_string(cfg.b2())});
    tr.push_back({"blocked-joint-statistics", "P(3,Yes | M1;M2[chi]) = P(4,Yes | M1;M2[chi]) = " + to_string(half) +
                                                  ", P(2,Yes) = P(∅,Yes) = 0, P(∅,No) = " + to_string(cfg.b2()) +
                                                  " for every chi"});
    tr.push_back({"unblocked-statistics", "P(4 | " + c0 + ") = 0, P(3 | " + cpi + ") = 0, P(2 | M0;M2[chi]) = " +
                                              to_string(cfg.b2() - cfg.a2)});
    tr.push_back({"sequential-marginal", "sum_beta P(beta,Yes | M1;M2[chi], lambda) = P(Yes | M1, lambda); its average is " +
                                             to_string(cfg.a2) + " > 0, so the which-path subset {lambda : P(Yes | M1, lambda) > 0} has weight " +
                                             to_string(cfg.a2)});
    if (!all) {
        tr.push_back({"relaxation", "relaxed: " + [&] {
                          std::string s;
                          for (const auto& n : r.relaxed) s += (s.empty() ? "" : ", ") + n;
                          return s;
                      }() + "; the corresponding ties are dropped from the admissibility rules"});
    }
    if (assumptions.roi) {
        tr.push_back({"roi-blocked-chi-independence", "P(beta,alpha | " + b0 + ", lambda) = P(beta,alpha | " + m1_m2(phases[1]) +
                                                          ", lambda) for every lambda"});
        if (assumptions.psi_anomic) {
            tr.push_back({"roi-tie-port4", "on the which-path subset P(4,Yes | M1;M2, lambda) = P(4 | " + c0 +
                                               ", lambda), whose average vanishes, so P(4,Yes | lambda) = 0 there"});
            tr.push_back({"roi-tie-port3", "on the which-path subset P(3,Yes | M1;M2, lambda) = P(3 | " + cpi +
                                               ", lambda), whose average vanishes, so P(3,Yes | lambda) = 0 there"});
        }
    }
    if (all) {
        tr.push_back({"blocked-zero-outcomes", "P(2,Yes) = P(∅,Yes) = 0 force P(2,Yes | lambda) = P(∅,Yes | lambda) = 0 on the support"});
        tr.push_back({"sequential-contradiction", "on the which-path subset sum_beta P(beta,Yes | lambda) = 0, yet it equals "
                                                  "P(Yes | M1, lambda) > 0 there; integrating gives 0 = " + to_string(cfg.a2)});
        tr.push_back({"auxiliary-port2", "the same ROI reading for port 2 gives P(2,Yes | lambda) = P(2 | M0;M2[chi], lambda) = 1 on "
                                         "the which-path subset (ports 4 and 3 being excluded at chi = 0 and pi), while P(2,Yes) = 0 "
                                         "forces it to vanish"});
    }
    if (res.status == LpStatus::Infeasible) {
        tr.push_back({"farkas-certificate", certificate_summary(r)});
    } else if (res.status == LpStatus::Feasible) {
        tr.push_back({"witness", "a deterministic model on " + std::to_string(r.witness_model->ontic_states().size()) +
                                     " ontic points reproduces the fragment" +
                                     (*r.witness_reproduces ? " exactly" : " only approximately")});
    }
    tr.push_back({"oracle", "assignment enumeration with vertex enumeration reports " + r.oracle_status +
                                (r.oracle_agrees ? ", in agreement" : ", DISAGREEING with the simplex")});

    r.notes = {kPortConventionNote, kPort3Note};
    return r;
}

TheoremReport check_hroi_original(const Rational& a2, const AssumptionSet& assumptions) {
    CircuitConfig cfg = CircuitConfig::make(a2);
    const Scenario sc = hroi_scenario(a2);
    const CompiledScenario cs = compile(sc, assumptions);
    const FeasibilityResult res = solve(cs.system);
    const FeasibilityResult orc = enumerate_oracle(sc, assumptions);

    TheoremReport r;
    r.theorem = "HROI";
    r.a2 = cfg.a2;
    r.chis = phase_labels();
    r.relaxed = relaxed_names(assumptions);
    r.status = res.status == LpStatus::Feasible ? "optimal" : to_string(res.status);
    r.max_overlap = res.optimum;
    r.oracle_status = orc.status == LpStatus::Feasible ? "optimal" : to_string(orc.status);
    r.oracle_agrees = orc.status == res.status && orc.optimum == res.optimum;
    record_program(r, cs, res);

    const bool all = assumptions.psi_anomic && assumptions.roi;
    bool validated = r.witness_reproduces.value_or(false);
    if (r.witness_model && res.optimum) {
        validated = validated && support_overlap(*r.witness_model, kPsiPlus, kPsiZero).mass == *res.optimum;
    }
    r.expected = res.status == LpStatus::Feasible && validated && (all ? *res.optimum == 0 : *res.optimum > 0);

    const auto phases = default_phases();
    auto& tr = r.trace;
    tr.push_back({"psi-plus-statistics", "P(4 | " + m2(phases[0]) + ") = 0 and P(3 | " + m2(phases[1]) +
                                             ") = 0 for psi_plus; P(2 | M2[chi]) = " + to_string(cfg.b2() - cfg.a2)});
    tr.push_back({"psi-0-statistics", "P(3 | M2[chi]) = P(4 | M2[chi]) = 1/2 and P(2 | M2[chi]) = 0 for psi_0, for every chi"});
    if (assumptions.roi) {
        tr.push_back({"roi-psi0-chi-independence", "for lambda in the support of psi_0 the responses at chi = 0 and chi = pi coincide"});
    }
    if (assumptions.psi_anomic) {
        tr.push_back({"shared-response", "a lambda in both supports answers psi_plus and psi_0 with the same response"});
    }
    if (all) {
        tr.push_back({"overlap-exclusion", "such a lambda cannot answer 4 at chi = 0 nor 3 at chi = pi, so by chi-independence it "
                                           "answers 2, which psi_0 never does; the supports are disjoint"});
    }
    tr.push_back({"lp-optimum", "maximal common mass sum_lambda min(P_psi_plus, P_psi_0) = " +
                                    (res.optimum ? to_string(*res.optimum) : std::string("n/a")) +
                                    ", certified by a dual bound that re-verifies exactly"});
    if (r.witness_model) {
        tr.push_back({"witness", "optimal model on " + std::to_string(r.witness_model->ontic_states().size()) +
                                     " ontic points " + (validated ? "reproduces the fragment exactly and attains the optimum"
                                                                   : "FAILED validation")});
    }
    tr.push_back({"oracle", "vertex enumeration reports " + r.oracle_status +
                                (orc.optimum ? " with optimum " + to_string(*orc.optimum) : std::string()) +
                                (r.oracle_agrees ? ", in agreement" : ", DISAGREEING with the simplex")});
    r.notes = {kPortConventionNote};
    return r;
}

}  // namespace ontic
