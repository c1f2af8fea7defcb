#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontic/phase.hpp"
#include "ontic/state.hpp"

namespace ontic {

// Half Mach-Zehnder device: BS0 splits the input into arms 0 and 1, a phase
// plate acts on arm 1, BS1 (transmission T = a/b) diverts part of arm 1 to
// exit port 2, and a 50/50 splitter BS2 recombines arms 0 and 1 onto ports
// 3 and 4. An optional beam blocker removes arm 1 right after BS0.
struct CircuitConfig {
    Rational a2;  // |a|^2; b^2 = 1 - a^2
    Phase chi;
    bool blocker = false;

    // Validates 0 < a^2 <= 1/2 (equivalently b >= a, T <= 1). Throws
    // HypothesisOutOfRange otherwise.
    static CircuitConfig make(const Rational& a2, Phase chi = {}, bool blocker = false);
    void validate() const;

    Rational b2() const { return 1 - a2; }
    Real a() const;
    Real b() const;
    Real transmission() const;   // T = a / b
    Real reflectivity() const;   // R = sqrt(1 - T^2)
};

// Mode space of the device: arms 0 and 1, exit ports 2, 3, 4.
const Space& device_space();

UnitaryOp bs0(const Real& a, const Real& b);
UnitaryOp phase_plate(const Phase& chi);
UnitaryOp bs1(const Real& t, const Real& r);
UnitaryOp bs2();

// [phase(chi) on arm 1, BS1(T = a/b) on {1, 2}, BS2 on {0, 1} -> {3, 4}].
std::vector<UnitaryOp> build_device(const CircuitConfig& cfg);
// Product of the device stages, first stage applied first.
UnitaryOp device_unitary(const std::vector<UnitaryOp>& stages);

// Input wave packet before BS0 (enters on the arm-0 port).
StateVector psi_in();
StateVector psi_plus(const CircuitConfig& cfg);
StateVector psi_minus(const CircuitConfig& cfg);
StateVector psi_zero();

struct Preparation {
    // |Psi+> without blocker; the sub-normalized branch a|0> with a blocker.
    StateVector state;
    // Weight of the removed |rest> part (b^2) when the blocker is present.
    std::optional<Real> rest_weight;
};

Preparation prepare(const CircuitConfig& cfg);

// Exit-port measurement {3, 4, 2} plus a residual effect on the arms.
const ProjectiveMeasurement& port_measurement();
// Which-arm record of the blocker: Yes = passed through arm 0.
const ProjectiveMeasurement& blocker_measurement();

class JointDistribution {
public:
    struct Entry {
        std::string beta;
        std::string alpha;
        Real p;
    };

    JointDistribution() = default;
    explicit JointDistribution(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    const std::vector<Entry>& entries() const { return entries_; }
    const Real& at(const std::string& beta, const std::string& alpha) const;
    Real marginal_alpha(const std::string& alpha) const;
    // Labels "beta,alpha", e.g. "4,Yes".
    OutcomeDistribution flattened() const;

private:
    std::vector<Entry> entries_;
};

inline const std::string kStopped = "∅";

// Blocker absent, device at phase chi: distribution over ports (3, 4, 2).
OutcomeDistribution run_m0_m2(const CircuitConfig& cfg, const Phase& chi);
inline OutcomeDistribution run_m0_m2(const CircuitConfig& cfg) { return run_m0_m2(cfg, cfg.chi); }

// Blocker present: joint distribution over beta in {3, 4, 2, ∅} and alpha in
// {Yes, No}.
JointDistribution run_m1_m2(const CircuitConfig& cfg, const Phase& chi);
inline JointDistribution run_m1_m2(const CircuitConfig& cfg) { return run_m1_m2(cfg, cfg.chi); }

// |0> sent through the full device: (1/2, 1/2, 0) over ports (3, 4, 2).
OutcomeDistribution run_psi0_full(const CircuitConfig& cfg);

// Distribution over ports for an arbitrary state entering the phase plate.
OutcomeDistribution run_device(const StateVector& state, const CircuitConfig& cfg, const Phase& chi);

// Phase sweeps of run_m0_m2. The OpenMP kernel and the serial reference
// return identical results in the same order.
std::vector<OutcomeDistribution> sweep_m0_m2(const CircuitConfig& cfg, std::span<const Phase> chis);
std::vector<OutcomeDistribution> sweep_m0_m2_serial(const CircuitConfig& cfg, std::span<const Phase> chis);

// Documented port convention: chi = 0 sends the unblocked beam to port 3.
extern const char* const kPortConventionNote;

}  // namespace ontic
