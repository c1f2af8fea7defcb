#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontic/rational.hpp"

namespace ontic {

enum class Relation { Equal, LessEqual, GreaterEqual };
std::string to_string(Relation r);

struct Term {
    std::size_t var;
    Rational coef;
};

struct Row {
    std::vector<Term> terms;
    Relation relation = Relation::Equal;
    Rational rhs;
    std::string tag;    // family of the constraint, e.g. "blocked-joint-statistics"
    std::string label;  // the concrete instance, e.g. "P(4,Yes | M1;M2[0]) = 1/6"
};

// Linear constraints over nonnegative rational variables, with an optional
// linear objective to maximize.
class ConstraintSystem {
public:
    std::size_t add_variable(std::string name);
    void add_row(Row row);
    void set_objective(std::vector<Term> terms);

    std::size_t num_variables() const { return names_.size(); }
    const std::vector<std::string>& variable_names() const { return names_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::optional<std::vector<Term>>& objective() const { return objective_; }

    Rational row_value(std::size_t row, const std::vector<Rational>& x) const;
    Rational objective_value(const std::vector<Rational>& x) const;
    // Index of the first row (or nonnegativity bound, reported as rows().size())
    // that x violates.
    std::optional<std::size_t> first_violation(const std::vector<Rational>& x) const;
    bool satisfied_by(const std::vector<Rational>& x) const { return !first_violation(x); }

    // Dense coefficient vector of one row.
    std::vector<Rational> dense_row(std::size_t row) const;

private:
    std::vector<std::string> names_;
    std::vector<Row> rows_;
    std::optional<std::vector<Term>> objective_;
};

// Row multipliers y with y_i free on equality rows, y_i >= 0 on >= rows and
// y_i <= 0 on <= rows. Every feasible x then obeys g.x >= h for g = sum_i y_i
// a_i, h = sum_i y_i b_i; g <= 0 together with h > 0 is impossible for x >= 0.
struct Certificate {
    std::vector<Rational> multipliers;
    std::vector<Rational> combined;  // g
    Rational bound;                  // h

    // Recomputes g and h from the rows and checks every sign condition.
    bool verify(const ConstraintSystem& cs) const;
};

// Dual solution of a maximization: v_i >= 0 on <= rows, v_i <= 0 on >= rows,
// sum_i v_i a_i >= c componentwise and v.b equal to the attained objective.
struct DualCertificate {
    std::vector<Rational> multipliers;
    Rational bound;

    bool verify(const ConstraintSystem& cs, const Rational& attained) const;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };
std::string to_string(LpStatus s);

struct FeasibilityResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> witness;
    std::optional<Certificate> certificate;
    std::optional<Rational> optimum;  // set when an objective was optimized
    std::optional<DualCertificate> dual;
};

// Two-phase primal simplex on a dense exact tableau with Bland's rule.
// Witnesses, Farkas certificates and dual certificates are re-verified
// before returning; a failed verification throws Error.
FeasibilityResult solve(const ConstraintSystem& cs);

}  // namespace ontic
