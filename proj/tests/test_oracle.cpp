#include <doctest.h>

#include "ontic/errors.hpp"
#include "ontic/oracle.hpp"

using namespace ontic;

namespace {

using R = Rational;

Row row(std::vector<Term> terms, Relation rel, R rhs) { return Row{std::move(terms), rel, rhs, "t", ""}; }

// k independent simplices of size n, each with one pinned coordinate.
ConstraintSystem blocks(int k, int n, R pin) {
    ConstraintSystem cs;
    for (int b = 0; b < k; ++b) {
        std::vector<Term> sum;
        std::size_t first = 0;
        for (int i = 0; i < n; ++i) {
            auto v = cs.add_variable("b" + std::to_string(b) + "_" + std::to_string(i));
            if (i == 0) first = v;
            sum.push_back({v, 1});
        }
        cs.add_row(row(sum, Relation::Equal, 1));
        cs.add_row(row({{first, 1}}, Relation::Equal, pin));
    }
    return cs;
}

}  // namespace

TEST_CASE("oracle decides tiny systems") {
    ConstraintSystem ok;
    auto x = ok.add_variable("x");
    ok.add_row(row({{x, 1}}, Relation::Equal, 1));
    auto r = enumerate_oracle(ok);
    CHECK(r.status == LpStatus::Feasible);
    CHECK(r.witness == std::vector<R>{1});

    ConstraintSystem bad;
    auto y = bad.add_variable("y");
    bad.add_row(row({{y, 1}}, Relation::Equal, -1));
    CHECK(enumerate_oracle(bad).status == LpStatus::Infeasible);
    CHECK_FALSE(enumerate_oracle(bad).certificate);
}

TEST_CASE("oracle optimizes and detects unboundedness") {
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y");
    cs.add_row(row({{x, 1}, {y, 1}}, Relation::LessEqual, 4));
    cs.add_row(row({{x, 1}, {y, 3}}, Relation::LessEqual, 6));
    cs.add_row(row({{x, 1}}, Relation::LessEqual, 3));
    cs.set_objective({{x, 3}, {y, 2}});
    auto r = enumerate_oracle(cs);
    REQUIRE(r.optimum);
    CHECK(*r.optimum == 11);
    CHECK(cs.satisfied_by(r.witness));

    ConstraintSystem u;
    auto a = u.add_variable("a"), b = u.add_variable("b");
    u.add_row(row({{a, 1}, {b, -1}}, Relation::LessEqual, 1));
    u.set_objective({{a, 1}});
    CHECK(enumerate_oracle(u).status == LpStatus::Unbounded);
    CHECK(enumerate_oracle_serial(u).status == LpStatus::Unbounded);
}

TEST_CASE("homogeneous rows force variables to zero") {
    // x + y = 0 forces both to zero, leaving z = 1 - w.
    ConstraintSystem cs;
    auto x = cs.add_variable("x"), y = cs.add_variable("y"), z = cs.add_variable("z"), w = cs.add_variable("w");
    cs.add_row(row({{x, 1}, {y, 1}}, Relation::Equal, 0));
    cs.add_row(row({{x, 1}, {z, 1}, {w, 1}}, Relation::Equal, 1));
    cs.add_row(row({{y, -1}, {w, 2}}, Relation::GreaterEqual, R(1, 2)));
    auto r = enumerate_oracle(cs);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(r.witness[x] == 0);
    CHECK(r.witness[y] == 0);
    CHECK(cs.satisfied_by(r.witness));
}

TEST_CASE("separable systems are decided block by block") {
    // 12 blocks of 8 variables: a flat enumeration would face C(96, 24) bases.
    auto cs = blocks(12, 8, R(1, 3));
    auto r = enumerate_oracle(cs, OracleOptions{100000});
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(cs.satisfied_by(r.witness));
    auto bad = blocks(12, 8, R(3, 2));
    CHECK(enumerate_oracle(bad, OracleOptions{100000}).status == LpStatus::Infeasible);
}

TEST_CASE("size cap") {
    ConstraintSystem cs;
    std::vector<Term> a, b;
    for (int i = 0; i < 40; ++i) {
        auto v = cs.add_variable("x" + std::to_string(i));
        a.push_back({v, 1});
        b.push_back({v, R(i % 7 + 1)});
    }
    cs.add_row(row(a, Relation::Equal, 1));
    cs.add_row(row(b, Relation::Equal, R(7, 2)));
    cs.add_row(row({{0, 1}, {5, 1}, {9, -1}}, Relation::Equal, R(1, 9)));
    CHECK_THROWS_AS(enumerate_oracle(cs, OracleOptions{10}), SizeCapExceeded);
    CHECK(enumerate_oracle(cs).status == solve(cs).status);
}

TEST_CASE("parallel and serial oracles return identical results") {
    ConstraintSystem cs;
    std::vector<std::size_t> v;
    for (int i = 0; i < 9; ++i) v.push_back(cs.add_variable("x" + std::to_string(i)));
    cs.add_row(row({{v[0], 1}, {v[1], 1}, {v[2], 1}, {v[3], 1}, {v[4], 1}}, Relation::Equal, 1));
    cs.add_row(row({{v[1], 2}, {v[3], -1}, {v[5], 1}}, Relation::LessEqual, R(1, 2)));
    cs.add_row(row({{v[4], 1}, {v[6], 1}, {v[7], 3}, {v[8], -2}}, Relation::GreaterEqual, R(1, 4)));
    cs.add_row(row({{v[2], 1}, {v[8], 1}}, Relation::Equal, R(2, 5)));
    cs.set_objective({{v[0], 1}, {v[7], -1}, {v[5], 2}});
    auto p = enumerate_oracle(cs), s = enumerate_oracle_serial(cs);
    CHECK(p.status == s.status);
    CHECK(p.witness == s.witness);
    CHECK(p.optimum == s.optimum);
    auto lp = solve(cs);
    CHECK(lp.status == p.status);
    CHECK(lp.optimum == p.optimum);
}
