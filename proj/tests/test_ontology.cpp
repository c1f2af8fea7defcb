#include <doctest.h>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"
#include "ontic/nogo.hpp"
#include "ontic/ontology.hpp"

using namespace ontic;

namespace {

using R = Rational;

// Two ontic states, two preparations with overlapping supports, one binary
// context answered deterministically on l0 and at random on l1.
OntologicalModel toy(AssumptionSet flags = {true, true, false, false}) {
    return OntologicalModel({"l0", "l1"},
                            {{"A", std::nullopt, {R(1, 2), R(1, 2)}}, {"B", std::nullopt, {R(0), R(1)}}},
                            {{"Z", std::nullopt, {"+", "-"}, {{R(1), R(0)}, {R(1, 4), R(3, 4)}}}}, flags);
}

}  // namespace

TEST_CASE("construction validates normalization and labels") {
    CHECK_THROWS_AS(OntologicalModel({}, {}, {}, {}), InvalidConfig);
    CHECK_THROWS_AS(OntologicalModel({"x", "x"}, {}, {}, {}), InvalidConfig);
    CHECK_THROWS_AS(OntologicalModel({"x"}, {{"A", std::nullopt, {R(1, 2)}}}, {}, {}), InvalidConfig);
    CHECK_THROWS_AS(OntologicalModel({"x", "y"}, {{"A", std::nullopt, {R(3, 2), R(-1, 2)}}}, {}, {}), InvalidConfig);
    CHECK_THROWS_AS(OntologicalModel({"x"}, {}, {{"Z", std::nullopt, {"+", "-"}, {{R(1, 2), R(1, 3)}}}}, {}),
                    InvalidConfig);
    CHECK_THROWS_AS(OntologicalModel({"x"}, {}, {{"Z", std::nullopt, {"+", "+"}, {{R(1, 2), R(1, 2)}}}}, {}),
                    InvalidConfig);
    // psi-anomic flag forbids preparation-indexed tables
    CHECK_THROWS_AS(OntologicalModel({"x"}, {{"A", std::nullopt, {R(1)}}},
                                     {{"Z", std::string("A"), {"+"}, {{R(1)}}}}, {true, false, false, false}),
                    InvalidConfig);
    CHECK_NOTHROW(toy());
}

TEST_CASE("predicted statistics are the weighted response average") {
    OntologicalModel m = toy();
    Distribution a = predicted_statistics(m, "A", "Z");
    CHECK(a.at("+") == R(1, 2) * 1 + R(1, 2) * R(1, 4));
    CHECK(a.at("-") == R(3, 8));
    Distribution b = predicted_statistics(m, "B", "Z");
    CHECK(b.at("+") == R(1, 4));
    CHECK_THROWS_AS(predicted_statistics(m, "C", "Z"), UnknownLabel);
    CHECK_THROWS_AS(predicted_statistics(m, "A", "X"), UnknownLabel);
}

TEST_CASE("reproduction reports deviations and missing entries") {
    OntologicalModel m = toy();
    Fragment ok{{"A", "Z", {{"+", "-"}, {R(5, 8), R(3, 8)}}}};
    CHECK(reproduces(m, ok).reproduces);
    Fragment off{{"A", "Z", {{"+", "-"}, {R(1, 2), R(1, 2)}}}};
    auto rep = reproduces(m, off);
    CHECK_FALSE(rep.reproduces);
    CHECK(rep.max_deviation == R(1, 8));
    CHECK(reproduces(m, off, R(1, 8)).reproduces);
    Fragment missing{{"C", "Z", {{"+", "-"}, {R(1), R(0)}}}};
    auto miss = reproduces(m, missing);
    CHECK_FALSE(miss.reproduces);
    REQUIRE(miss.entries.size() == 1);
    CHECK(miss.entries[0].missing);
}

TEST_CASE("support overlap and psi-onticity") {
    OntologicalModel m = toy();
    Overlap o = support_overlap(m, "A", "B");
    CHECK(o.mass == R(1, 2));
    CHECK_FALSE(o.disjoint);
    CHECK(support_overlap(m, "B", "A").mass == o.mass);
    CHECK(support_overlap(m, "A", "A").mass == 1);
    CHECK_FALSE(is_psi_ontic(m));
    OntologicalModel d({"l0", "l1"}, {{"A", std::nullopt, {R(1), R(0)}}, {"B", std::nullopt, {R(0), R(1)}}}, {},
                       {true, true, false, false});
    CHECK(support_overlap(d, "A", "B").disjoint);
    CHECK(is_psi_ontic(d));
}

TEST_CASE("conditional responses of a sequential context") {
    OntologicalModel m({"l"}, {{"P", std::nullopt, {R(1)}}},
                       {{"W", std::nullopt, {"Yes", "No"}, {{R(1, 3), R(2, 3)}}},
                        {"W;D", std::nullopt, {"3,Yes", "4,Yes", "3,No", "4,No"}, {{R(1, 6), R(1, 6), R(2, 3), R(0)}}}},
                       {true, true, false, false});
    CHECK(conditional_response(m, "W;D", "W", "3", "Yes", "l") == R(1, 2));
    CHECK(conditional_response(m, "W;D", "W", "4", "No", "l") == 0);
    OntologicalModel z({"l"}, {{"P", std::nullopt, {R(1)}}},
                       {{"W", std::nullopt, {"Yes", "No"}, {{R(0), R(1)}}},
                        {"W;D", std::nullopt, {"3,Yes", "3,No"}, {{R(0), R(1)}}}},
                       {true, true, false, false});
    CHECK_THROWS_AS(conditional_response(z, "W;D", "W", "3", "Yes", "l"), UndefinedConditional);
}

TEST_CASE("measurement-indexed epistemic states fail PIP") {
    OntologicalModel m({"l0", "l1"},
                       {{"A", std::nullopt, {R(1), R(0)}}, {"A", std::string("Z"), {R(0), R(1)}}},
                       {{"Z", std::nullopt, {"+"}, {{R(1)}, {R(1)}}}}, {});
    CHECK(m.epistemic("A", "Z").weights[1] == 1);
    CHECK(m.epistemic("A", "Y").weights[0] == 1);
    auto rep = check_assumptions(m, {false, true, false, false});
    REQUIRE(rep.find("pip"));
    CHECK(rep.find("pip")->verdict == Verdict::Fail);
    CHECK(rep.find("psi_anomic") == nullptr);
}

TEST_CASE("lifting makes a nomic model anomic and ontic") {
    OntologicalModel nomic({"l"}, {{"A", std::nullopt, {R(1)}}, {"B", std::nullopt, {R(1)}}},
                           {{"Z", std::string("A"), {"+", "-"}, {{R(1), R(0)}}},
                            {"Z", std::string("B"), {"+", "-"}, {{R(0), R(1)}}}},
                           {false, true, false, false});
    auto before = check_assumptions(nomic, {true, false, false, false});
    CHECK(before.find("psi_anomic")->verdict == Verdict::Fail);
    CHECK(support_overlap(nomic, "A", "B").mass == 1);

    OntologicalModel lifted = lift_model(nomic);
    CHECK(lifted.flags().psi_anomic);
    CHECK(lifted.ontic_states() == std::vector<std::string>{lifted_label("l", "A"), lifted_label("l", "B")});
    CHECK(check_assumptions(lifted, {true, false, false, false}).find("psi_anomic")->verdict == Verdict::Pass);
    CHECK(support_overlap(lifted, "A", "B").mass == 0);
    CHECK(is_psi_ontic(lifted));
    for (const auto& p : {"A", "B"}) {
        auto x = predicted_statistics(nomic, p, "Z"), y = predicted_statistics(lifted, p, "Z");
        CHECK(x.probs == y.probs);
    }
}

TEST_CASE("ROI and PIP-PS checks need matching fragments") {
    CHECK_THROWS_AS(check_assumptions(toy(), {false, false, false, true}), FragmentMismatch);
    CHECK_THROWS_AS(check_assumptions(toy(), {false, false, true, false}), FragmentMismatch);
    OntologicalModel cx = nomic_counterexample(R(1, 3));
    auto rep = check_assumptions(cx, {true, true, false, true});
    CHECK(rep.find("psi_anomic")->verdict == Verdict::Fail);
    CHECK(rep.find("pip")->verdict == Verdict::Pass);
    CHECK(rep.find("roi")->verdict == Verdict::Fail);
    CHECK(rep.find("pip_ps") == nullptr);
}

TEST_CASE("PIP-PS on product preparations") {
    // Factorized: P_{0⊗1}(u⊗v) = P_0(u) P_1(v)
    std::vector<std::string> lam{"a⊗a", "a⊗b", "b⊗a", "b⊗b"};
    OntologicalModel good(lam,
                          {{"0⊗0", std::nullopt, {R(1, 4), R(1, 4), R(1, 4), R(1, 4)}},
                           {"0⊗1", std::nullopt, {R(0), R(1, 2), R(0), R(1, 2)}},
                           {"1⊗0", std::nullopt, {R(0), R(0), R(1, 2), R(1, 2)}},
                           {"1⊗1", std::nullopt, {R(0), R(0), R(0), R(1)}}},
                          {}, {});
    CHECK(check_assumptions(good, {false, false, true, false}).find("pip_ps")->verdict == Verdict::Pass);
    OntologicalModel bad(lam,
                         {{"0⊗0", std::nullopt, {R(1, 2), R(0), R(0), R(1, 2)}},
                          {"0⊗1", std::nullopt, {R(0), R(1, 2), R(0), R(1, 2)}},
                          {"1⊗0", std::nullopt, {R(0), R(0), R(1, 2), R(1, 2)}},
                          {"1⊗1", std::nullopt, {R(0), R(0), R(0), R(1)}}},
                         {}, {});
    CHECK(check_assumptions(bad, {false, false, true, false}).find("pip_ps")->verdict == Verdict::Fail);
}
