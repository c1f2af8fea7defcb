#include "ontic/interferometer.hpp"

#include <exception>

#include "ontic/errors.hpp"

namespace ontic {

const char* const kPortConventionNote =
    "port convention: chi=0 routes the unblocked beam to port 3, P3 = a^2(1+cos chi), "
    "P4 = a^2(1-cos chi); the alternative labeling with ports 3 and 4 swapped is not used";

namespace {

const std::string kYes = "Yes";
const std::string kNo = "No";
const std::string kResidual = "arms";

UnitaryOp embed(std::string name, const std::vector<std::pair<std::pair<int, int>, Amplitude>>& entries,
                std::vector<int> untouched) {
    const Space& space = device_space();
    const std::size_t n = space.size();
    std::vector<Amplitude> m(n * n);
    // device_space() lists modes 0..4 in order
    auto idx = [](int mode) { return static_cast<std::size_t>(mode); };
    for (const auto& [rc, v] : entries) m[idx(rc.first) * n + idx(rc.second)] = v;
    for (int mode : untouched) m[idx(mode) * n + idx(mode)] = Amplitude(1);
    return UnitaryOp(std::move(name), space, std::move(m));
}

}  // namespace

CircuitConfig CircuitConfig::make(const Rational& a2, Phase chi, bool blocker) {
    CircuitConfig cfg{a2, std::move(chi), blocker};
    cfg.a2.canonicalize();
    cfg.validate();
    return cfg;
}

void CircuitConfig::validate() const {
    if (a2 <= 0 || a2 > 1) {
        throw HypothesisOutOfRange("a^2 = " + to_string(a2) + " must lie in (0, 1]");
    }
    if (a2 * 2 > 1) {
        throw HypothesisOutOfRange("hypothesis out of range: a^2 = " + to_string(a2) +
                                   " violates b >= a (a^2 <= 1/2); transmission T = a/b would exceed 1");
    }
}

Real CircuitConfig::a() const { return Real(Surd::sqrt(a2)); }
Real CircuitConfig::b() const { return Real(Surd::sqrt(b2())); }
Real CircuitConfig::transmission() const { return Real(Surd::sqrt(a2 / b2())); }
Real CircuitConfig::reflectivity() const { return Real(Surd::sqrt(1 - a2 / b2())); }

const Space& device_space() {
    static const Space space{"0", "1", "2", "3", "4"};
    return space;
}

UnitaryOp bs0(const Real& a, const Real& b) {
    return embed("BS0", {{{0, 0}, a}, {{1, 0}, b}, {{0, 1}, b}, {{1, 1}, -a}}, {2, 3, 4});
}

UnitaryOp phase_plate(const Phase& chi) {
    return embed("phase(" + chi.label() + ")", {{{1, 1}, chi.exp_i()}}, {0, 2, 3, 4});
}

UnitaryOp bs1(const Real& t, const Real& r) {
    // |1> -> T|1> - R|2>,  |2> -> R|1> + T|2>
    return embed("BS1", {{{1, 1}, t}, {{2, 1}, -r}, {{1, 2}, r}, {{2, 2}, t}}, {0, 3, 4});
}

UnitaryOp bs2() {
    Amplitude h(Surd::radical(Rational(1, 2), 2));
    return embed("BS2",
                 {{{3, 0}, h}, {{4, 0}, h}, {{3, 1}, h}, {{4, 1}, -h},
                  {{0, 3}, h}, {{1, 3}, h}, {{0, 4}, h}, {{1, 4}, -h}},
                 {2});
}

std::vector<UnitaryOp> build_device(const CircuitConfig& cfg) {
    cfg.validate();
    return {phase_plate(cfg.chi), bs1(cfg.transmission(), cfg.reflectivity()), bs2()};
}

UnitaryOp device_unitary(const std::vector<UnitaryOp>& stages) {
    UnitaryOp u = UnitaryOp::identity(device_space());
    for (const auto& s : stages) u = s.compose(u);
    return u;
}

StateVector psi_in() { return StateVector::basis(device_space(), "0"); }

StateVector psi_plus(const CircuitConfig& cfg) {
    return StateVector(device_space(), {cfg.a(), cfg.b(), 0, 0, 0});
}

StateVector psi_minus(const CircuitConfig& cfg) {
    return StateVector(device_space(), {cfg.a(), -cfg.b(), 0, 0, 0});
}

StateVector psi_zero() { return StateVector::basis(device_space(), "0"); }

Preparation prepare(const CircuitConfig& cfg) {
    cfg.validate();
    StateVector plus = apply(bs0(cfg.a(), cfg.b()), psi_in());
    if (!cfg.blocker) return {plus, std::nullopt};
    // Projective branch selection on arm 0; the arm-1 part is the removed rest.
    StateVector branch(device_space(), {plus.amps()[0], 0, 0, 0, 0}, true);
    return {branch, Real(cfg.b2())};
}

const ProjectiveMeasurement& port_measurement() {
    static const ProjectiveMeasurement m = ProjectiveMeasurement::from_modes(
        "ports", device_space(), {{"3", {"3"}}, {"4", {"4"}}, {"2", {"2"}}, {kResidual, {"0", "1"}}});
    return m;
}

const ProjectiveMeasurement& blocker_measurement() {
    static const ProjectiveMeasurement m = ProjectiveMeasurement::from_modes(
        "M1", device_space(), {{kYes, {"0"}}, {kNo, {"1"}}, {kResidual, {"2", "3", "4"}}});
    return m;
}

OutcomeDistribution run_device(const StateVector& state, const CircuitConfig& cfg, const Phase& chi) {
    CircuitConfig at = cfg;
    at.chi = chi;
    StateVector out = apply(device_unitary(build_device(at)), state);
    OutcomeDistribution d = born_probabilities(out, port_measurement());
    if (!d.at(kResidual).is_zero() && d.at(kResidual).to_double() > 1e-12) {
        throw PreconditionError("device left amplitude in the arms");
    }
    std::vector<std::pair<std::string, Real>> ports;
    for (const auto& [o, p] : d.entries()) {
        if (o != kResidual) ports.emplace_back(o, p);
    }
    return OutcomeDistribution(std::move(ports));
}

OutcomeDistribution run_m0_m2(const CircuitConfig& cfg, const Phase& chi) {
    return run_device(prepare(CircuitConfig{cfg.a2, chi, false}).state, cfg, chi);
}

JointDistribution run_m1_m2(const CircuitConfig& cfg, const Phase& chi) {
    CircuitConfig blocked{cfg.a2, chi, true};
    StateVector plus = prepare(CircuitConfig{cfg.a2, chi, false}).state;
    OutcomeDistribution which = born_probabilities(plus, blocker_measurement());
    Preparation prep = prepare(blocked);
    OutcomeDistribution yes_ports = run_device(prep.state, cfg, chi);

    std::vector<JointDistribution::Entry> entries;
    for (const auto& [beta, p] : yes_ports.entries()) entries.push_back({beta, kYes, p});
    entries.push_back({kStopped, kYes, Real(0)});
    for (const auto& [beta, p] : yes_ports.entries()) entries.push_back({beta, kNo, Real(0)});
    // Every particle taking arm 1 is stopped; its weight equals the removed rest.
    entries.push_back({kStopped, kNo, which.at(kNo)});
    return JointDistribution(std::move(entries));
}

OutcomeDistribution run_psi0_full(const CircuitConfig& cfg) { return run_device(psi_zero(), cfg, cfg.chi); }

const Real& JointDistribution::at(const std::string& beta, const std::string& alpha) const {
    for (const auto& e : entries_) {
        if (e.beta == beta && e.alpha == alpha) return e.p;
    }
    throw UnknownLabel("joint outcome (" + beta + ", " + alpha + ") not in distribution");
}

Real JointDistribution::marginal_alpha(const std::string& alpha) const {
    Real t;
    for (const auto& e : entries_) {
        if (e.alpha == alpha) t = t + e.p;
    }
    return t;
}

OutcomeDistribution JointDistribution::flattened() const {
    std::vector<std::pair<std::string, Real>> out;
    for (const auto& e : entries_) out.emplace_back(e.beta + "," + e.alpha, e.p);
    return OutcomeDistribution(std::move(out));
}

std::vector<OutcomeDistribution> sweep_m0_m2_serial(const CircuitConfig& cfg, std::span<const Phase> chis) {
    std::vector<OutcomeDistribution> out;
    out.reserve(chis.size());
    for (const auto& chi : chis) out.push_back(run_m0_m2(cfg, chi));
    return out;
}

std::vector<OutcomeDistribution> sweep_m0_m2(const CircuitConfig& cfg, std::span<const Phase> chis) {
    cfg.validate();
    std::vector<OutcomeDistribution> out(chis.size());
    const auto n = static_cast<long>(chis.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run_m0_m2(cfg, chis[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(ontic_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace ontic
