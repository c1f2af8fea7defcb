#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"
#include "ontic/interferometer.hpp"

using namespace ontic;

namespace {

// Amplitude bookkeeping done by hand: arm 0 carries a, arm 1 carries
// b e^{i chi}; BS1 keeps T b = a in arm 1 and sends -R b to port 2; BS2 sums
// and differences the arms onto ports 3 and 4.
std::array<double, 3> closed_form(double a2, double chi) {
    double a = std::sqrt(a2), b = std::sqrt(1 - a2);
    double t = a / b, r = std::sqrt(1 - t * t);
    std::complex<double> arm0 = a, arm1 = b * std::polar(1.0, chi);
    std::complex<double> port2 = -r * arm1;
    arm1 *= t;
    std::complex<double> p3 = (arm0 + arm1) / std::sqrt(2.0), p4 = (arm0 - arm1) / std::sqrt(2.0);
    return {std::norm(p3), std::norm(p4), std::norm(port2)};
}

Rational exact(const OutcomeDistribution& d, const std::string& o) { return d.at(o).to_rational(); }

}  // namespace

TEST_CASE("hypothesis b >= a is enforced") {
    CHECK_NOTHROW(CircuitConfig::make(Rational(1, 2)));
    CHECK_THROWS_AS(CircuitConfig::make(Rational(3, 5)), HypothesisOutOfRange);
    CHECK_THROWS_AS(CircuitConfig::make(Rational(0)), HypothesisOutOfRange);
    CHECK_THROWS_AS(CircuitConfig::make(Rational(-1, 3)), HypothesisOutOfRange);
    CircuitConfig bad{Rational(2, 3), {}, false};
    CHECK_THROWS_AS(run_m0_m2(bad, Phase()), HypothesisOutOfRange);
}

TEST_CASE("device stages are unitary") {
    for (Rational a2 : {Rational(1, 10), Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
        CircuitConfig cfg = CircuitConfig::make(a2, Phase::pi_fraction(1, 3));
        CHECK(is_unitary(bs0(cfg.a(), cfg.b())));
        for (const auto& stage : build_device(cfg)) CHECK(is_unitary(stage));
        CHECK(is_unitary(device_unitary(build_device(cfg))));
    }
    CHECK(is_unitary(bs2()));
    CHECK(is_unitary(phase_plate(Phase::radians(0.7))));
}

TEST_CASE("unblocked runs at a^2 = 1/3") {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 3));
    auto d0 = run_m0_m2(cfg, Phase());
    auto dpi = run_m0_m2(cfg, Phase::pi_fraction(1));
    CHECK(d0.outcomes() == std::vector<std::string>{"3", "4", "2"});
    CHECK(exact(d0, "3") == Rational(2, 3));
    CHECK(exact(d0, "4") == 0);
    CHECK(exact(d0, "2") == Rational(1, 3));
    CHECK(exact(dpi, "3") == 0);
    CHECK(exact(dpi, "4") == Rational(2, 3));
    CHECK(exact(dpi, "2") == Rational(1, 3));
}

TEST_CASE("unblocked runs follow a^2(1 +- cos chi), b^2 - a^2") {
    for (Rational a2 : {Rational(1, 10), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 7)}) {
        CircuitConfig cfg = CircuitConfig::make(a2);
        for (long den : {1L, 2L, 3L, 4L, 6L}) {
            for (long num = 0; num < 2 * den; ++num) {
                Phase chi = Phase::pi_fraction(num, den);
                auto d = run_m0_m2(cfg, chi);
                auto ref = closed_form(to_double(a2), chi.to_radians());
                CHECK(std::abs(d.at("3").to_double() - ref[0]) < 1e-12);
                CHECK(std::abs(d.at("4").to_double() - ref[1]) < 1e-12);
                CHECK(std::abs(d.at("2").to_double() - ref[2]) < 1e-12);
                CHECK(d.total() == Real(1));
                // cos chi is rational at multiples of pi/3 and pi/2
                if (auto c = chi.cos().rational()) {
                    CHECK(exact(d, "3") == a2 * (1 + *c));
                    CHECK(exact(d, "4") == a2 * (1 - *c));
                    CHECK(exact(d, "2") == 1 - 2 * a2);
                }
            }
        }
    }
}

TEST_CASE("float phases use the float backing") {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 4));
    auto d = run_m0_m2(cfg, Phase::radians(1.1));
    auto ref = closed_form(0.25, 1.1);
    CHECK_FALSE(d.at("3").is_exact());
    CHECK(std::abs(d.at("3").to_double() - ref[0]) < 1e-12);
    CHECK(std::abs(d.at("4").to_double() - ref[1]) < 1e-12);
}

TEST_CASE("blocked run: joint table and ordering") {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 3));
    for (const Phase& chi : hardy::default_phases()) {
        auto j = run_m1_m2(cfg, chi);
        CHECK(j.at("3", "Yes").to_rational() == Rational(1, 6));
        CHECK(j.at("4", "Yes").to_rational() == Rational(1, 6));
        CHECK(j.at("2", "Yes").to_rational() == 0);
        CHECK(j.at(kStopped, "Yes").to_rational() == 0);
        CHECK(j.at(kStopped, "No").to_rational() == Rational(2, 3));
        CHECK(j.marginal_alpha("Yes").to_rational() == Rational(1, 3));
        CHECK(j.flattened().outcomes() == hardy::joint_outcomes());
        CHECK_THROWS_AS(j.at("5", "Yes"), UnknownLabel);
    }
    // Blocked arm 0 alone: a^2/2 to each of ports 3, 4 for any a^2, any chi.
    for (Rational a2 : {Rational(1, 10), Rational(1, 2)}) {
        auto j = run_m1_m2(CircuitConfig::make(a2), Phase::pi_fraction(1, 2));
        CHECK(j.at("3", "Yes").to_rational() == a2 / 2);
        CHECK(j.at("4", "Yes").to_rational() == a2 / 2);
        CHECK(j.at(kStopped, "No").to_rational() == 1 - a2);
    }
}

TEST_CASE("heisenberg and schroedinger pictures agree") {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 3), Phase::pi_fraction(2, 3));
    UnitaryOp u = device_unitary(build_device(cfg));
    StateVector plus = psi_plus(cfg);
    auto forward = born_probabilities(apply(u, plus), port_measurement());
    auto backward = born_probabilities(plus, port_measurement().pulled_back(u));
    for (const auto& o : forward.outcomes()) CHECK(forward.at(o) == backward.at(o));
    CHECK(equal_up_to_phase(prepare(cfg).state, plus));
    CHECK(prepare(CircuitConfig::make(Rational(1, 3), {}, true)).rest_weight == Real(Rational(2, 3)));
}

TEST_CASE("psi_0 through the full device splits evenly") {
    for (const Phase& chi : {Phase(), Phase::pi_fraction(1, 3), Phase::pi_fraction(1, 2), Phase::pi_fraction(1)}) {
        CircuitConfig cfg = CircuitConfig::make(Rational(1, 3), chi);
        auto d = run_psi0_full(cfg);
        CHECK(exact(d, "3") == Rational(1, 2));
        CHECK(exact(d, "4") == Rational(1, 2));
        CHECK(exact(d, "2") == 0);
    }
}

TEST_CASE("parallel sweep matches the serial reference") {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 4));
    std::vector<Phase> chis;
    for (long k = 0; k < 48; ++k) chis.push_back(k % 2 ? Phase::pi_fraction(k, 12) : Phase::radians(0.1 * k));
    auto par = sweep_m0_m2(cfg, chis);
    auto ser = sweep_m0_m2_serial(cfg, chis);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].outcomes() == ser[i].outcomes());
        for (const auto& o : par[i].outcomes()) CHECK(par[i].at(o) == ser[i].at(o));
    }
}

TEST_CASE("fragment contents") {
    Fragment f = hardy::fragment(Rational(1, 3));
    CHECK(f.size() == 9);
    CHECK(f.front().preparation == hardy::kPsiIn);
    CHECK(f.front().context == hardy::kM1);
    CHECK(f.front().quantum.at("Yes") == Rational(1, 3));
    bool found = false;
    for (const auto& e : f) {
        if (e.preparation == hardy::kPsiZero && e.context == hardy::m2(Phase::pi_fraction(1))) {
            found = true;
            CHECK(e.quantum.at("3") == Rational(1, 2));
        }
    }
    CHECK(found);
}
