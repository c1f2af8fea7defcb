#include "ontic/scenario.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include <omp.h>

#include "ontic/errors.hpp"

namespace ontic {

std::size_t Scenario::context_index(const std::string& ctx) const {
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        if (contexts[i].name == ctx) return i;
    }
    throw UnknownLabel("scenario '" + name + "' has no context '" + ctx + "'");
}

Fragment Scenario::fragment() const {
    Fragment out;
    for (const auto& st : statistics) {
        out.push_back({st.preparation, st.context, Distribution{contexts[context_index(st.context)].outcomes, st.probs}});
    }
    return out;
}

namespace {

struct CompiledEvent {
    std::size_t context = 0;
    std::vector<char> member;

    bool holds(const Assignment& s) const { return member[s[context]] != 0; }
};

struct CompiledTie {
    std::optional<CompiledEvent> guard;
    CompiledEvent lhs;
    CompiledEvent rhs;

    bool holds(const Assignment& s) const {
        if (guard && !guard->holds(s)) return true;
        return lhs.holds(s) == rhs.holds(s);
    }
};

CompiledEvent compile_event(const std::vector<ContextSpec>& contexts, const Event& e) {
    for (std::size_t c = 0; c < contexts.size(); ++c) {
        if (contexts[c].name != e.context) continue;
        CompiledEvent out{c, std::vector<char>(contexts[c].outcomes.size(), 0)};
        for (const auto& o : e.outcomes) {
            auto it = std::find(contexts[c].outcomes.begin(), contexts[c].outcomes.end(), o);
            if (it == contexts[c].outcomes.end()) {
                throw UnknownLabel("tie refers to outcome '" + o + "' absent from context '" + e.context + "'");
            }
            out.member[static_cast<std::size_t>(it - contexts[c].outcomes.begin())] = 1;
        }
        return out;
    }
    throw UnknownLabel("tie refers to unknown context '" + e.context + "'");
}

std::vector<CompiledTie> compile_ties(const std::vector<ContextSpec>& contexts, const std::vector<Tie>& ties) {
    std::vector<CompiledTie> out;
    for (const auto& t : ties) {
        CompiledTie ct{std::nullopt, compile_event(contexts, t.lhs), compile_event(contexts, t.rhs)};
        if (t.guard) ct.guard = compile_event(contexts, *t.guard);
        out.push_back(std::move(ct));
    }
    return out;
}

std::uint64_t raw_count(const std::vector<ContextSpec>& contexts, const EnumerationLimits& limits) {
    std::uint64_t raw = 1;
    for (const auto& c : contexts) {
        if (c.outcomes.empty()) throw InvalidConfig("context '" + c.name + "' has no outcomes");
        if (raw > limits.max_raw / c.outcomes.size()) {
            throw SizeCapExceeded("more than " + std::to_string(limits.max_raw) + " raw deterministic assignments");
        }
        raw *= c.outcomes.size();
    }
    return raw;
}

Assignment decode(std::uint64_t k, const std::vector<ContextSpec>& contexts) {
    Assignment s(contexts.size());
    for (std::size_t c = contexts.size(); c-- > 0;) {
        const auto radix = contexts[c].outcomes.size();
        s[c] = static_cast<std::uint16_t>(k % radix);
        k /= radix;
    }
    return s;
}

bool all_hold(const std::vector<CompiledTie>& ties, const Assignment& s) {
    return std::all_of(ties.begin(), ties.end(), [&](const CompiledTie& t) { return t.holds(s); });
}

[[noreturn]] void too_many(const EnumerationLimits& limits) {
    throw SizeCapExceeded("more than " + std::to_string(limits.max_admissible) + " admissible assignments");
}

}  // namespace

bool satisfies(const Assignment& s, const std::vector<ContextSpec>& contexts, const Tie& tie) {
    return compile_ties(contexts, {tie}).front().holds(s);
}

std::vector<Assignment> admissible_assignments(const std::vector<ContextSpec>& contexts, const std::vector<Tie>& ties,
                                               const EnumerationLimits& limits) {
    const std::uint64_t raw = raw_count(contexts, limits);
    const auto compiled = compile_ties(contexts, ties);
    std::vector<char> keep(raw, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(raw); ++k) {
        keep[static_cast<std::size_t>(k)] = all_hold(compiled, decode(static_cast<std::uint64_t>(k), contexts)) ? 1 : 0;
    }
    std::vector<Assignment> out;
    for (std::uint64_t k = 0; k < raw; ++k) {
        if (!keep[k]) continue;
        if (out.size() == limits.max_admissible) too_many(limits);
        out.push_back(decode(k, contexts));
    }
    return out;
}

std::vector<Assignment> admissible_assignments_serial(const std::vector<ContextSpec>& contexts,
                                                      const std::vector<Tie>& ties, const EnumerationLimits& limits) {
    const std::uint64_t raw = raw_count(contexts, limits);
    const auto compiled = compile_ties(contexts, ties);
    std::vector<Assignment> out;
    for (std::uint64_t k = 0; k < raw; ++k) {
        Assignment s = decode(k, contexts);
        if (!all_hold(compiled, s)) continue;
        if (out.size() == limits.max_admissible) too_many(limits);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Tie> active_ties(const Scenario& sc, const AssumptionSet& assumptions) {
    std::vector<Tie> out;
    for (const auto& t : sc.ties) {
        if (!assumptions.roi && t.kind == TieKind::Roi) continue;
        if (!assumptions.psi_anomic && t.requires_anomic) continue;
        out.push_back(t);
    }
    return out;
}

const Assignment& CompiledScenario::response(const OnticPoint& pt, std::size_t prep) const {
    return pt.size() == 1 ? pt.front() : pt.at(prep);
}

namespace {

void validate(const Scenario& sc) {
    if (sc.preparations.empty()) throw InvalidConfig("scenario '" + sc.name + "' has no preparations");
    for (const auto& st : sc.statistics) {
        if (std::find(sc.preparations.begin(), sc.preparations.end(), st.preparation) == sc.preparations.end()) {
            throw UnknownLabel("statistic for unknown preparation '" + st.preparation + "'");
        }
        if (sc.contexts[sc.context_index(st.context)].outcomes.size() != st.probs.size()) {
            throw InvalidConfig("statistic for '" + st.context + "' has the wrong number of outcomes");
        }
    }
    for (const auto& t : sc.ties) {
        if (t.preparation &&
            std::find(sc.preparations.begin(), sc.preparations.end(), *t.preparation) == sc.preparations.end()) {
            throw UnknownLabel("tie '" + t.tag + "' scoped to unknown preparation '" + *t.preparation + "'");
        }
    }
}

std::size_t prep_index(const Scenario& sc, const std::string& p) {
    return static_cast<std::size_t>(std::find(sc.preparations.begin(), sc.preparations.end(), p) -
                                    sc.preparations.begin());
}

}  // namespace

CompiledScenario compile(const Scenario& sc, const AssumptionSet& assumptions, const EnumerationLimits& limits) {
    validate(sc);
    const std::size_t np = sc.preparations.size();
    const std::size_t nc = sc.contexts.size();

    std::vector<Tie> global;
    std::vector<std::vector<Tie>> scoped(np);
    for (auto& t : active_ties(sc, assumptions)) {
        if (t.preparation) {
            scoped[prep_index(sc, *t.preparation)].push_back(std::move(t));
        } else {
            global.push_back(std::move(t));
        }
    }
    const auto base = admissible_assignments(sc.contexts, global, limits);
    std::vector<std::vector<char>> ok(np, std::vector<char>(base.size(), 1));
    for (std::size_t p = 0; p < np; ++p) {
        const auto compiled = compile_ties(sc.contexts, scoped[p]);
        for (std::size_t i = 0; i < base.size(); ++i) ok[p][i] = all_hold(compiled, base[i]) ? 1 : 0;
    }

    CompiledScenario out{sc, assumptions, {}, {}, {}, {}};
    const bool tuples = !assumptions.psi_anomic && np > 1;
    std::vector<std::vector<char>> point_ok;  // [p][point]
    if (!tuples) {
        for (const auto& s : base) out.points.push_back({s});
        point_ok = ok;
    } else {
        std::vector<std::vector<std::size_t>> per(np);
        std::uint64_t total = 1;
        for (std::size_t p = 0; p < np; ++p) {
            for (std::size_t i = 0; i < base.size(); ++i) {
                if (ok[p][i]) per[p].push_back(i);
            }
            if (per[p].empty()) {
                total = 0;
            } else if (total > limits.max_admissible / per[p].size()) {
                too_many(limits);
            } else {
                total *= per[p].size();
            }
        }
        for (std::uint64_t k = 0; k < total; ++k) {
            OnticPoint pt(np);
            std::uint64_t rest = k;
            for (std::size_t p = np; p-- > 0;) {
                pt[p] = base[per[p][rest % per[p].size()]];
                rest /= per[p].size();
            }
            out.points.push_back(std::move(pt));
        }
        point_ok.assign(np, std::vector<char>(out.points.size(), 1));
    }

    // Contexts in which each preparation has statistics.
    std::vector<std::vector<char>> measured(np, std::vector<char>(nc, 0));
    for (const auto& st : sc.statistics) measured[prep_index(sc, st.preparation)][sc.context_index(st.context)] = 1;

    const std::size_t slots = assumptions.pip ? 1 : nc;
    auto& cs = out.system;
    out.weight_var.assign(np, std::vector<std::vector<long>>(slots, std::vector<long>(out.points.size(), -1)));
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t slot = 0; slot < slots; ++slot) {
            if (!assumptions.pip && !measured[p][slot]) continue;
            const std::string where = sc.preparations[p] + (assumptions.pip ? "" : "@" + sc.contexts[slot].name);
            std::vector<Term> norm;
            for (std::size_t i = 0; i < out.points.size(); ++i) {
                if (!point_ok[p][i]) continue;
                auto v = cs.add_variable("w[" + where + ",#" + std::to_string(i) + "]");
                out.weight_var[p][slot][i] = static_cast<long>(v);
                norm.push_back({v, 1});
            }
            cs.add_row(Row{std::move(norm), Relation::Equal, 1, "epistemic-normalization",
                           "sum_lambda P_" + where + "(lambda) = 1"});
        }
    }

    for (const auto& st : sc.statistics) {
        const std::size_t p = prep_index(sc, st.preparation);
        const std::size_t c = sc.context_index(st.context);
        const std::size_t slot = assumptions.pip ? 0 : c;
        const auto& outcomes = sc.contexts[c].outcomes;
        for (std::size_t o = 0; o < outcomes.size(); ++o) {
            std::vector<Term> terms;
            for (std::size_t i = 0; i < out.points.size(); ++i) {
                long v = out.weight_var[p][slot][i];
                if (v >= 0 && out.response(out.points[i], p)[c] == o) terms.push_back({static_cast<std::size_t>(v), 1});
            }
            cs.add_row(Row{std::move(terms), Relation::Equal, st.probs[o], st.tag,
                           "P(" + outcomes[o] + " | " + st.context + ") = " + to_string(st.probs[o]) + " for " +
                               st.preparation});
        }
    }

    out.overlap_var.assign(out.points.size(), -1);
    if (sc.overlap) {
        if (!assumptions.pip) throw InvalidConfig("the overlap objective needs measurement-independent epistemic states (PIP)");
        const std::size_t a = prep_index(sc, sc.overlap->first);
        const std::size_t b = prep_index(sc, sc.overlap->second);
        if (a == np || b == np) throw UnknownLabel("overlap objective names an unknown preparation");
        std::vector<Term> objective;
        for (std::size_t i = 0; i < out.points.size(); ++i) {
            long wa = out.weight_var[a][0][i];
            long wb = out.weight_var[b][0][i];
            if (wa < 0 || wb < 0) continue;
            auto m = cs.add_variable("m[#" + std::to_string(i) + "]");
            out.overlap_var[i] = static_cast<long>(m);
            for (long w : {wa, wb}) {
                cs.add_row(Row{{{m, 1}, {static_cast<std::size_t>(w), -1}}, Relation::LessEqual, 0, "overlap-bound",
                               "m(#" + std::to_string(i) + ") <= " + cs.variable_names()[static_cast<std::size_t>(w)]});
            }
            objective.push_back({m, 1});
        }
        cs.set_objective(std::move(objective));
    }
    return out;
}

std::string describe(const CompiledScenario& cs, const OnticPoint& pt) {
    const auto& ctx = cs.scenario.contexts;
    auto one = [&](const Assignment& s) {
        std::string out;
        for (std::size_t c = 0; c < ctx.size(); ++c) {
            if (!out.empty()) out += " ";
            out += ctx[c].name + "=" + ctx[c].outcomes[s[c]];
        }
        return out;
    };
    if (pt.size() == 1) return one(pt.front());
    std::string out;
    for (std::size_t p = 0; p < pt.size(); ++p) {
        if (!out.empty()) out += " ";
        out += "[" + cs.scenario.preparations[p] + ": " + one(pt[p]) + "]";
    }
    return out;
}

OntologicalModel model_from_witness(const CompiledScenario& cs, const std::vector<Rational>& witness) {
    const auto& sc = cs.scenario;
    if (witness.size() != cs.system.num_variables()) throw InvalidConfig("witness length does not match the program");
    const std::size_t np = sc.preparations.size();

    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        bool positive = false;
        for (const auto& per_prep : cs.weight_var) {
            for (const auto& slot : per_prep) {
                if (slot[i] >= 0 && witness[static_cast<std::size_t>(slot[i])] > 0) positive = true;
            }
        }
        if (positive) used.push_back(i);
    }
    std::vector<std::string> labels;
    for (auto i : used) labels.push_back("s" + std::to_string(i));

    std::vector<EpistemicState> eps;
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t slot = 0; slot < cs.slots(); ++slot) {
            const auto& vars = cs.weight_var[p][slot];
            if (std::all_of(vars.begin(), vars.end(), [](long v) { return v < 0; })) continue;
            EpistemicState e{sc.preparations[p], std::nullopt, {}};
            if (!cs.assumptions.pip) e.context = sc.contexts[slot].name;
            for (auto i : used) e.weights.push_back(vars[i] >= 0 ? witness[static_cast<std::size_t>(vars[i])] : Rational(0));
            eps.push_back(std::move(e));
        }
    }

    const bool tuples = !cs.points.empty() && cs.points.front().size() > 1;
    std::vector<ResponseTable> tables;
    for (std::size_t c = 0; c < sc.contexts.size(); ++c) {
        const auto& outcomes = sc.contexts[c].outcomes;
        for (std::size_t p = 0; p < (tuples ? np : 1); ++p) {
            ResponseTable t{sc.contexts[c].name, std::nullopt, outcomes, {}};
            if (tuples) t.preparation = sc.preparations[p];
            for (auto i : used) {
                std::vector<Rational> row(outcomes.size(), Rational(0));
                row[cs.response(cs.points[i], p)[c]] = 1;
                t.entries.push_back(std::move(row));
            }
            tables.push_back(std::move(t));
        }
    }

    AssumptionSet flags = cs.assumptions;
    flags.pip_ps = false;
    if (tuples) flags.psi_anomic = false;
    return OntologicalModel(std::move(labels), std::move(eps), std::move(tables), flags);
}

}  // namespace ontic
