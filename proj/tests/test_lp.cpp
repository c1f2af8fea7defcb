#include <doctest.h>

#include "ontic/errors.hpp"
#include "ontic/lp.hpp"

using namespace ontic;

namespace {

using R = Rational;

Row row(std::vector<Term> terms, Relation rel, R rhs) { return Row{std::move(terms), rel, rhs, "t", ""}; }

}  // namespace

TEST_CASE("x = 1 is feasible") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x");
    cs.add_row(row({{x, 1}}, Relation::Equal, 1));
    auto r = solve(cs);
    CHECK(r.status == LpStatus::Feasible);
    CHECK(r.witness == std::vector<R>{1});
    CHECK_FALSE(r.certificate);
}

TEST_CASE("x = -1 is infeasible with a certificate") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x");
    cs.add_row(row({{x, 1}}, Relation::Equal, -1));
    auto r = solve(cs);
    REQUIRE(r.status == LpStatus::Infeasible);
    REQUIRE(r.certificate);
    CHECK(r.certificate->verify(cs));
    // y = -1: -x = 1 with x >= 0
    CHECK(r.certificate->multipliers[0] < 0);
    CHECK(r.certificate->bound > 0);
    CHECK(r.certificate->combined[0] <= 0);
}

TEST_CASE("certificate sign conventions on inequality rows") {
    // x + y <= 1, x + y >= 2
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y");
    cs.add_row(row({{x, 1}, {y, 1}}, Relation::LessEqual, 1));
    cs.add_row(row({{x, 1}, {y, 1}}, Relation::GreaterEqual, 2));
    auto r = solve(cs);
    REQUIRE(r.status == LpStatus::Infeasible);
    const auto& c = *r.certificate;
    CHECK(c.verify(cs));
    CHECK(c.multipliers[0] <= 0);
    CHECK(c.multipliers[1] >= 0);

    Certificate forged = c;
    forged.multipliers[0] = -forged.multipliers[0];
    CHECK_FALSE(forged.verify(cs));
    Certificate wrong_bound = c;
    wrong_bound.bound += 1;
    CHECK_FALSE(wrong_bound.verify(cs));
}

TEST_CASE("maximization returns optimum and dual") {
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y");
    cs.add_row(row({{x, 1}, {y, 1}}, Relation::LessEqual, 4));
    cs.add_row(row({{x, 1}, {y, 3}}, Relation::LessEqual, 6));
    cs.add_row(row({{x, 1}}, Relation::LessEqual, 3));
    cs.set_objective({{x, 3}, {y, 2}});
    auto r = solve(cs);
    REQUIRE(r.status == LpStatus::Feasible);
    REQUIRE(r.optimum);
    CHECK(*r.optimum == 11);  // x = 3, y = 1
    CHECK(r.witness == std::vector<R>{3, 1});
    REQUIRE(r.dual);
    CHECK(r.dual->verify(cs, 11));
    CHECK_FALSE(r.dual->verify(cs, 10));
}

TEST_CASE("unbounded objective") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y");
    cs.add_row(row({{x, 1}, {y, -1}}, Relation::LessEqual, 1));
    cs.set_objective({{x, 1}});
    CHECK(solve(cs).status == LpStatus::Unbounded);
}

TEST_CASE("degenerate cycling example terminates under Bland's rule") {
    // Beale's example, written as a maximization over nonnegative variables.
    ConstraintSystem cs;
    std::vector<std::size_t> v;
    for (int i = 0; i < 4; ++i) v.push_back(cs.add_variable("x" + std::to_string(i)));
    cs.add_row(row({{v[0], R(1, 4)}, {v[1], -8}, {v[2], -1}, {v[3], 9}}, Relation::LessEqual, 0));
    cs.add_row(row({{v[0], R(1, 2)}, {v[1], -12}, {v[2], R(-1, 2)}, {v[3], 3}}, Relation::LessEqual, 0));
    cs.add_row(row({{v[2], 1}}, Relation::LessEqual, 1));
    cs.set_objective({{v[0], R(3, 4)}, {v[1], -20}, {v[2], R(1, 2)}, {v[3], -6}});
    auto r = solve(cs);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(*r.optimum == R(5, 4));
}

TEST_CASE("redundant equalities and negative right-hand sides") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y"), z = cs.add_variable("z");
    cs.add_row(row({{x, 1}, {y, 1}, {z, 1}}, Relation::Equal, 1));
    cs.add_row(row({{x, 2}, {y, 2}, {z, 2}}, Relation::Equal, 2));
    cs.add_row(row({{x, -1}}, Relation::LessEqual, R(-1, 3)));
    auto r = solve(cs);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(cs.satisfied_by(r.witness));
    CHECK(r.witness[x] >= R(1, 3));
}

TEST_CASE("system helpers") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y");
    cs.add_row(row({{x, 1}, {y, 2}}, Relation::GreaterEqual, 3));
    CHECK(cs.row_value(0, {1, 1}) == 3);
    CHECK(cs.dense_row(0) == std::vector<R>{1, 2});
    CHECK(cs.first_violation({0, 1}) == std::optional<std::size_t>(0));
    CHECK(cs.first_violation({-1, 5}) == std::optional<std::size_t>(1));
    CHECK(cs.satisfied_by({1, 1}));
    CHECK(to_string(Relation::LessEqual) == "<=");
    CHECK(to_string(LpStatus::Infeasible) == "infeasible");
}
