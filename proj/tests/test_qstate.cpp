#include <doctest.h>

#include "ontic/errors.hpp"
#include "ontic/state.hpp"

using namespace ontic;

namespace {

Space two() { return {"0", "1"}; }

Amplitude h() { return Amplitude(Surd::radical(Rational(1, 2), 2)); }

UnitaryOp hadamard() { return UnitaryOp("H", two(), {h(), h(), h(), -h()}); }

}  // namespace

TEST_CASE("labels and spaces") {
    CHECK(ModeLabel::pair("0", "1").parts().size() == 2);
    CHECK(ModeLabel::pair("0", "1") != ModeLabel::pair("1", "0"));
    CHECK_THROWS_AS(require_distinct({"0", "0"}), InvalidConfig);
    CHECK_THROWS_AS(StateVector(two(), {1}), SpaceMismatch);
    StateVector e1 = StateVector::basis(two(), "1");
    CHECK(e1.at("1") == Amplitude(1));
    CHECK_THROWS_AS(e1.at("7"), UnknownLabel);
}

TEST_CASE("inner products are conjugate-linear in the first slot") {
    StateVector u(two(), {Amplitude::i(), 0});
    StateVector v(two(), {1, 0});
    CHECK(inner_product(u, v) == -Amplitude::i());
    CHECK(inner_product(v, u) == Amplitude::i());
    CHECK(u.norm2() == Real(1));
    StateVector w(Space{"a", "b"}, {1, 0});
    CHECK_THROWS_AS(inner_product(v, w), SpaceMismatch);
}

TEST_CASE("unitaries: adjoint, composition, unitarity") {
    UnitaryOp hd = hadamard();
    CHECK(is_unitary(hd));
    UnitaryOp hh = hd.compose(hd);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) CHECK(hh(r, c) == Amplitude(r == c ? 1 : 0));
    UnitaryOp bad("bad", two(), {1, 1, 0, 1});
    CHECK_FALSE(is_unitary(bad));
    UnitaryOp s("S", two(), {1, 0, 0, Amplitude::i()});
    CHECK(s.adjoint()(1, 1) == -Amplitude::i());
    CHECK(is_unitary(s.compose(hd)));
    CHECK(is_unitary(UnitaryOp::identity(two())));
}

TEST_CASE("born probabilities from a hadamard") {
    StateVector plus = apply(hadamard(), StateVector::basis(two(), "0"));
    auto m = ProjectiveMeasurement::from_modes("Z", two(), {{"0", {"0"}}, {"1", {"1"}}});
    OutcomeDistribution d = born_probabilities(plus, m);
    CHECK(d.at("0") == Real(Rational(1, 2)));
    CHECK(d.at("1") == Real(Rational(1, 2)));
    CHECK(d.total() == Real(1));
    CHECK(d.rationals() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(d.at("2"), UnknownLabel);

    // Heisenberg picture: pulling the measurement back through H gives the same numbers.
    OutcomeDistribution back = born_probabilities(StateVector::basis(two(), "0"), m.pulled_back(hadamard()));
    CHECK(back.at("0") == d.at("0"));
    CHECK(back.at("1") == d.at("1"));
}

TEST_CASE("measurements must be complete and orthonormal") {
    CHECK_THROWS_AS(ProjectiveMeasurement::from_modes("Z", two(), {{"0", {"0"}}}), InvalidConfig);
    CHECK_THROWS_AS(ProjectiveMeasurement::from_modes("Z", two(), {{"0", {"0"}}, {"0", {"1"}}}), InvalidConfig);
    StateVector a(two(), {1, 0}), b(two(), {h(), h()});
    CHECK_THROWS_AS(ProjectiveMeasurement("X", two(), {{"a", {a}}, {"b", {b}}}), InvalidConfig);
}

TEST_CASE("tensor products and global phase") {
    StateVector zero = StateVector::basis(two(), "0");
    StateVector plus = apply(hadamard(), zero);
    StateVector t = tensor(zero, plus);
    CHECK(t.dim() == 4);
    CHECK(t.at(ModeLabel::pair("0", "1")) == h());
    CHECK(t.at(ModeLabel::pair("1", "0")) == Amplitude(0));
    CHECK(t.norm2() == Real(1));
    CHECK(equal_up_to_phase(plus, plus.scaled(Amplitude::i(), false)));
    CHECK_FALSE(equal_up_to_phase(plus, zero));
    CHECK(max_distance(plus, plus.to_float()) < 1e-15);
    CHECK_FALSE(plus.to_float().is_exact());
}
