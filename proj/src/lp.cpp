#include "ontic/lp.hpp"

#include "ontic/errors.hpp"

namespace ontic {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Equal: return "=";
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
    }
    return "?";
}

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Feasible: return "feasible";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

std::size_t ConstraintSystem::add_variable(std::string name) {
    names_.push_back(std::move(name));
    return names_.size() - 1;
}

void ConstraintSystem::add_row(Row row) {
    for (const auto& t : row.terms) {
        if (t.var >= names_.size()) throw InvalidConfig("row '" + row.label + "' references an unknown variable");
    }
    rows_.push_back(std::move(row));
}

void ConstraintSystem::set_objective(std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.var >= names_.size()) throw InvalidConfig("objective references an unknown variable");
    }
    objective_ = std::move(terms);
}

Rational ConstraintSystem::row_value(std::size_t row, const std::vector<Rational>& x) const {
    Rational v = 0;
    for (const auto& t : rows_.at(row).terms) v += t.coef * x.at(t.var);
    return v;
}

Rational ConstraintSystem::objective_value(const std::vector<Rational>& x) const {
    Rational v = 0;
    if (objective_) {
        for (const auto& t : *objective_) v += t.coef * x.at(t.var);
    }
    return v;
}

std::optional<std::size_t> ConstraintSystem::first_violation(const std::vector<Rational>& x) const {
    if (x.size() != names_.size()) return rows_.size();
    for (const auto& v : x) {
        if (v < 0) return rows_.size();
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational lhs = row_value(i, x);
        const Rational& b = rows_[i].rhs;
        bool ok = true;
        switch (rows_[i].relation) {
            case Relation::Equal: ok = lhs == b; break;
            case Relation::LessEqual: ok = lhs <= b; break;
            case Relation::GreaterEqual: ok = lhs >= b; break;
        }
        if (!ok) return i;
    }
    return std::nullopt;
}

std::vector<Rational> ConstraintSystem::dense_row(std::size_t row) const {
    std::vector<Rational> out(names_.size(), Rational(0));
    for (const auto& t : rows_.at(row).terms) out[t.var] += t.coef;
    return out;
}

namespace {

bool sign_ok(Relation r, const Rational& y, bool farkas) {
    // Farkas multipliers: >= rows take y >= 0; dual multipliers of a
    // maximization take the opposite orientation.
    switch (r) {
        case Relation::Equal: return true;
        case Relation::GreaterEqual: return farkas ? y >= 0 : y <= 0;
        case Relation::LessEqual: return farkas ? y <= 0 : y >= 0;
    }
    return false;
}

}  // namespace

bool Certificate::verify(const ConstraintSystem& cs) const {
    const auto& rows = cs.rows();
    if (multipliers.size() != rows.size()) return false;
    std::vector<Rational> g(cs.num_variables(), Rational(0));
    Rational h = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& y = multipliers[i];
        if (!sign_ok(rows[i].relation, y, true)) return false;
        if (y == 0) continue;
        for (const auto& t : rows[i].terms) g[t.var] += y * t.coef;
        h += y * rows[i].rhs;
    }
    for (const auto& gj : g) {
        if (gj > 0) return false;
    }
    return h > 0 && g == combined && h == bound;
}

bool DualCertificate::verify(const ConstraintSystem& cs, const Rational& attained) const {
    const auto& rows = cs.rows();
    if (multipliers.size() != rows.size() || !cs.objective()) return false;
    std::vector<Rational> lhs(cs.num_variables(), Rational(0));
    Rational vb = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& v = multipliers[i];
        if (!sign_ok(rows[i].relation, v, false)) return false;
        if (v == 0) continue;
        for (const auto& t : rows[i].terms) lhs[t.var] += v * t.coef;
        vb += v * rows[i].rhs;
    }
    std::vector<Rational> c(cs.num_variables(), Rational(0));
    for (const auto& t : *cs.objective()) c[t.var] += t.coef;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (lhs[j] < c[j]) return false;
    }
    return vb == bound && vb == attained;
}

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = a[r][c];
        for (auto& v : a[r]) v /= p;
        b[r] /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
            }
            b[i] -= f * b[r];
        }
        basis[r] = c;
    }
};

enum class Outcome { Optimal, Unbounded };

// Minimizes cost.x over the tableau's feasible set, entering only `allowed`
// columns. Bland's rule guarantees termination under degeneracy.
Outcome minimize(Tableau& t, const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    const std::size_t m = t.a.size();
    std::vector<char> basic(t.cols, 0);
    for (;;) {
        std::fill(basic.begin(), basic.end(), 0);
        for (auto k : t.basis) basic[k] = 1;

        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < t.cols && !entering; ++j) {
            if (!allowed[j] || basic[j]) continue;
            Rational d = cost[j];
            for (std::size_t i = 0; i < m; ++i) {
                if (t.a[i][j] != 0 && cost[t.basis[i]] != 0) d -= cost[t.basis[i]] * t.a[i][j];
            }
            if (d < 0) entering = j;
        }
        if (!entering) return Outcome::Optimal;

        const std::size_t c = *entering;
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.a[i][c] <= 0) continue;
            Rational ratio = t.b[i] / t.a[i][c];
            if (!leave || ratio < best || (ratio == best && t.basis[i] < t.basis[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (!leave) return Outcome::Unbounded;
        t.pivot(*leave, c);
    }
}

}  // namespace

FeasibilityResult solve(const ConstraintSystem& cs) {
    const auto& rows = cs.rows();
    const std::size_t n = cs.num_variables();
    const std::size_t m = rows.size();

    std::vector<std::size_t> slack_col(m, 0);
    std::size_t cols = n;
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].relation != Relation::Equal) slack_col[i] = cols++;
    }
    const std::size_t art0 = cols;
    cols += m;

    Tableau t;
    t.cols = cols;
    t.a.assign(m, std::vector<Rational>(cols, Rational(0)));
    t.b.resize(m);
    t.basis.resize(m);
    std::vector<int> sigma(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        sigma[i] = rows[i].rhs < 0 ? -1 : 1;
        for (const auto& term : rows[i].terms) t.a[i][term.var] += sigma[i] * term.coef;
        if (rows[i].relation == Relation::LessEqual) t.a[i][slack_col[i]] = sigma[i];
        if (rows[i].relation == Relation::GreaterEqual) t.a[i][slack_col[i]] = -sigma[i];
        t.a[i][art0 + i] = 1;
        t.b[i] = sigma[i] * rows[i].rhs;
        t.basis[i] = art0 + i;
    }

    // c_B^T B^{-1}, read off the artificial columns, which started as I.
    auto row_duals = [&](const std::vector<Rational>& cost) {
        std::vector<Rational> y(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t i = 0; i < m; ++i) {
                if (cost[t.basis[i]] != 0) y[k] += cost[t.basis[i]] * t.a[i][art0 + k];
            }
            y[k] *= sigma[k];
        }
        return y;
    };
    auto primal = [&] {
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < n) x[t.basis[i]] = t.b[i];
        }
        return x;
    };

    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t k = art0; k < cols; ++k) phase1[k] = 1;
    minimize(t, phase1, std::vector<char>(cols, 1));

    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= art0) infeas += t.b[i];
    }

    FeasibilityResult result;
    if (infeas > 0) {
        Certificate cert;
        cert.multipliers = row_duals(phase1);
        cert.combined.assign(n, Rational(0));
        cert.bound = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (const auto& term : rows[i].terms) cert.combined[term.var] += cert.multipliers[i] * term.coef;
            cert.bound += cert.multipliers[i] * rows[i].rhs;
        }
        if (!cert.verify(cs)) throw Error("simplex produced a Farkas certificate that fails verification");
        result.status = LpStatus::Infeasible;
        result.certificate = std::move(cert);
        return result;
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < art0) continue;
        for (std::size_t j = 0; j < art0; ++j) {
            if (t.a[i][j] != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    std::vector<char> allowed(cols, 1);
    for (std::size_t k = art0; k < cols; ++k) allowed[k] = 0;

    if (!cs.objective()) {
        result.status = LpStatus::Feasible;
        result.witness = primal();
    } else {
        std::vector<Rational> c(cols, Rational(0));
        for (const auto& term : *cs.objective()) c[term.var] += term.coef;
        std::vector<Rational> neg(cols, Rational(0));
        for (std::size_t j = 0; j < cols; ++j) neg[j] = -c[j];
        Outcome out = minimize(t, neg, allowed);
        result.witness = primal();
        if (out == Outcome::Unbounded) {
            result.status = LpStatus::Unbounded;
        } else {
            result.status = LpStatus::Feasible;
            result.optimum = cs.objective_value(result.witness);
            DualCertificate dual;
            dual.multipliers = row_duals(c);
            dual.bound = 0;
            for (std::size_t i = 0; i < m; ++i) dual.bound += dual.multipliers[i] * rows[i].rhs;
            if (!dual.verify(cs, *result.optimum)) throw Error("simplex optimum failed dual verification");
            result.dual = std::move(dual);
        }
    }
    if (!cs.satisfied_by(result.witness)) throw Error("simplex witness fails the constraint rows");
    return result;
}

}  // namespace ontic
