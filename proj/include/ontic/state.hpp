#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ontic/amplitude.hpp"

namespace ontic {

// Mode/gate label. A simple label has one component ("0", "rest", "∅");
// tensor-product spaces use ordered tuples such as ("0", "1").
class ModeLabel {
public:
    ModeLabel() = default;
    ModeLabel(std::string name) : parts_{std::move(name)} {}  // NOLINT(google-explicit-constructor)
    ModeLabel(const char* name) : parts_{name} {}              // NOLINT(google-explicit-constructor)
    static ModeLabel pair(const ModeLabel& a, const ModeLabel& b);

    const std::vector<std::string>& parts() const { return parts_; }
    std::string to_string() const;

    friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
    friend bool operator==(const ModeLabel&, const ModeLabel&) = default;

private:
    std::vector<std::string> parts_;
};

using Space = std::vector<ModeLabel>;

// Throws InvalidConfig if labels repeat.
void require_distinct(const Space& space);

class StateVector {
public:
    StateVector() = default;
    // `subnormalized` marks branch states (e.g. a|0> after a blocker) whose
    // squared norm is intentionally below 1.
    StateVector(Space space, std::vector<Amplitude> amps, bool subnormalized = false);
    static StateVector basis(const Space& space, const ModeLabel& mode);

    const Space& space() const { return space_; }
    const std::vector<Amplitude>& amps() const { return amps_; }
    std::size_t dim() const { return amps_.size(); }
    const Amplitude& at(const ModeLabel& mode) const;
    std::size_t index_of(const ModeLabel& mode) const;
    bool subnormalized() const { return subnormalized_; }
    bool is_exact() const;

    Real norm2() const;
    StateVector scaled(const Amplitude& c, bool subnormalized) const;
    StateVector to_float() const;

private:
    Space space_;
    std::vector<Amplitude> amps_;
    bool subnormalized_ = false;
};

class UnitaryOp {
public:
    UnitaryOp() = default;
    // Row-major matrix over `space`. Unitarity is not checked here; see
    // is_unitary().
    UnitaryOp(std::string name, Space space, std::vector<Amplitude> matrix);
    static UnitaryOp identity(const Space& space);

    const std::string& name() const { return name_; }
    const Space& space() const { return space_; }
    std::size_t dim() const { return space_.size(); }
    const Amplitude& operator()(std::size_t row, std::size_t col) const { return matrix_[row * dim() + col]; }

    UnitaryOp adjoint() const;
    // this * rhs (rhs applied first).
    UnitaryOp compose(const UnitaryOp& rhs) const;

private:
    std::string name_;
    Space space_;
    std::vector<Amplitude> matrix_;
};

// U^dagger U == I: identically for an exact matrix, entrywise within `tol`
// when any entry is float-backed.
bool is_unitary(const UnitaryOp& u, double tol = 1e-12);

struct Effect {
    std::string outcome;
    // Orthonormal vectors spanning the projector's range.
    std::vector<StateVector> range;
};

class ProjectiveMeasurement {
public:
    // Validates that all range vectors are mutually orthonormal and that the
    // effects sum to the identity (their total count equals the dimension).
    ProjectiveMeasurement(std::string context, Space space, std::vector<Effect> effects);
    // One effect per listed outcome, each projecting onto a set of modes.
    static ProjectiveMeasurement from_modes(std::string context, const Space& space,
                                            const std::vector<std::pair<std::string, std::vector<ModeLabel>>>& groups);

    const std::string& context() const { return context_; }
    const Space& space() const { return space_; }
    const std::vector<Effect>& effects() const { return effects_; }

    // Effects conjugated by U^dagger, so that probabilities of U v against this
    // measurement equal probabilities of v against the result.
    ProjectiveMeasurement pulled_back(const UnitaryOp& u) const;

private:
    std::string context_;
    Space space_;
    std::vector<Effect> effects_;
};

class OutcomeDistribution {
public:
    OutcomeDistribution() = default;
    explicit OutcomeDistribution(std::vector<std::pair<std::string, Real>> entries);

    const std::vector<std::pair<std::string, Real>>& entries() const { return entries_; }
    const Real& at(const std::string& outcome) const;
    bool contains(const std::string& outcome) const;
    Real total() const;
    std::vector<std::string> outcomes() const;
    // Exact rational probabilities in outcome order; throws NotRepresentable.
    std::vector<Rational> rationals() const;

private:
    std::vector<std::pair<std::string, Real>> entries_;
};

// <u|v>, conjugate-linear in u.
Amplitude inner_product(const StateVector& u, const StateVector& v);
StateVector apply(const UnitaryOp& u, const StateVector& v);
OutcomeDistribution born_probabilities(const StateVector& v, const ProjectiveMeasurement& m);
StateVector tensor(const StateVector& u, const StateVector& v);
// Equality up to a global phase: |<u|v>|^2 == <u|u><v|v> and equal norms.
bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol = 0.0);
// Entrywise maximum distance (spaces must match).
double max_distance(const StateVector& u, const StateVector& v);

}  // namespace ontic
