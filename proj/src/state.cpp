#include "ontic/state.hpp"

#include <algorithm>
#include <set>

#include "ontic/errors.hpp"

namespace ontic {

namespace {

void require_same_space(const Space& a, const Space& b, const char* what) {
    if (a != b) throw SpaceMismatch(std::string(what) + ": operands live on different labeled spaces");
}

std::string space_string(const Space& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i].to_string();
    }
    return out + "}";
}

}  // namespace

ModeLabel ModeLabel::pair(const ModeLabel& a, const ModeLabel& b) {
    ModeLabel out;
    out.parts_ = a.parts_;
    out.parts_.insert(out.parts_.end(), b.parts_.begin(), b.parts_.end());
    return out;
}

std::string ModeLabel::to_string() const {
    if (parts_.size() == 1) return parts_.front();
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i];
    }
    return out + ")";
}

void require_distinct(const Space& space) {
    std::set<ModeLabel> seen(space.begin(), space.end());
    if (seen.size() != space.size()) throw InvalidConfig("repeated mode label in " + space_string(space));
}

// ---- StateVector ----------------------------------------------------------

StateVector::StateVector(Space space, std::vector<Amplitude> amps, bool subnormalized)
    : space_(std::move(space)), amps_(std::move(amps)), subnormalized_(subnormalized) {
    require_distinct(space_);
    if (space_.size() != amps_.size()) throw SpaceMismatch("amplitude count does not match the space");
}

StateVector StateVector::basis(const Space& space, const ModeLabel& mode) {
    std::vector<Amplitude> amps(space.size());
    StateVector v(space, std::move(amps));
    v.amps_[v.index_of(mode)] = Amplitude(1);
    return v;
}

std::size_t StateVector::index_of(const ModeLabel& mode) const {
    auto it = std::find(space_.begin(), space_.end(), mode);
    if (it == space_.end()) throw UnknownLabel("mode " + mode.to_string() + " not in " + space_string(space_));
    return static_cast<std::size_t>(it - space_.begin());
}

const Amplitude& StateVector::at(const ModeLabel& mode) const { return amps_[index_of(mode)]; }

bool StateVector::is_exact() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Amplitude& a) { return a.is_exact(); });
}

Real StateVector::norm2() const {
    Real total;
    for (const auto& a : amps_) total = total + a.norm2();
    return total;
}

StateVector StateVector::scaled(const Amplitude& c, bool subnormalized) const {
    std::vector<Amplitude> out;
    out.reserve(amps_.size());
    for (const auto& a : amps_) out.push_back(c * a);
    return StateVector(space_, std::move(out), subnormalized);
}

StateVector StateVector::to_float() const {
    std::vector<Amplitude> out;
    out.reserve(amps_.size());
    for (const auto& a : amps_) out.push_back(a.to_float());
    return StateVector(space_, std::move(out), subnormalized_);
}

// ---- UnitaryOp ------------------------------------------------------------

UnitaryOp::UnitaryOp(std::string name, Space space, std::vector<Amplitude> matrix)
    : name_(std::move(name)), space_(std::move(space)), matrix_(std::move(matrix)) {
    require_distinct(space_);
    if (matrix_.size() != space_.size() * space_.size()) throw SpaceMismatch("matrix size does not match the space");
}

UnitaryOp UnitaryOp::identity(const Space& space) {
    std::vector<Amplitude> m(space.size() * space.size());
    for (std::size_t i = 0; i < space.size(); ++i) m[i * space.size() + i] = Amplitude(1);
    return UnitaryOp("I", space, std::move(m));
}

UnitaryOp UnitaryOp::adjoint() const {
    const std::size_t n = dim();
    std::vector<Amplitude> m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[c * n + r] = (*this)(r, c).conj();
    }
    return UnitaryOp(name_ + "^dag", space_, std::move(m));
}

UnitaryOp UnitaryOp::compose(const UnitaryOp& rhs) const {
    require_same_space(space_, rhs.space_, "compose");
    const std::size_t n = dim();
    std::vector<Amplitude> m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Amplitude acc;
            for (std::size_t k = 0; k < n; ++k) {
                if ((*this)(r, k).is_zero() || rhs(k, c).is_zero()) continue;
                acc += (*this)(r, k) * rhs(k, c);
            }
            m[r * n + c] = acc;
        }
    }
    return UnitaryOp(name_ + "*" + rhs.name_, space_, std::move(m));
}

bool is_unitary(const UnitaryOp& u, double tol) {
    UnitaryOp p = u.adjoint().compose(u);
    const std::size_t n = u.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Amplitude expected = r == c ? Amplitude(1) : Amplitude(0);
            const Amplitude& got = p(r, c);
            if (got.is_exact()) {
                if (!(got == expected)) return false;
            } else if (distance(got, expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

// ---- Measurements ---------------------------------------------------------

ProjectiveMeasurement::ProjectiveMeasurement(std::string context, Space space, std::vector<Effect> effects)
    : context_(std::move(context)), space_(std::move(space)), effects_(std::move(effects)) {
    require_distinct(space_);
    std::vector<const StateVector*> all;
    std::set<std::string> names;
    for (const auto& e : effects_) {
        if (!names.insert(e.outcome).second) throw InvalidConfig("duplicate outcome '" + e.outcome + "'");
        for (const auto& v : e.range) {
            require_same_space(space_, v.space(), "measurement effect");
            all.push_back(&v);
        }
    }
    if (all.size() != space_.size()) {
        throw InvalidConfig("measurement '" + context_ + "' is not complete: effects do not sum to the identity");
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            Amplitude ip = inner_product(*all[i], *all[j]);
            Amplitude expected = i == j ? Amplitude(1) : Amplitude(0);
            bool ok = ip.is_exact() ? ip == expected : distance(ip, expected) <= 1e-12;
            if (!ok) throw InvalidConfig("measurement '" + context_ + "' effects are not orthonormal");
        }
    }
}

ProjectiveMeasurement ProjectiveMeasurement::from_modes(
    std::string context, const Space& space,
    const std::vector<std::pair<std::string, std::vector<ModeLabel>>>& groups) {
    std::vector<Effect> effects;
    for (const auto& [outcome, modes] : groups) {
        Effect e{outcome, {}};
        for (const auto& m : modes) e.range.push_back(StateVector::basis(space, m));
        effects.push_back(std::move(e));
    }
    return ProjectiveMeasurement(std::move(context), space, std::move(effects));
}

ProjectiveMeasurement ProjectiveMeasurement::pulled_back(const UnitaryOp& u) const {
    UnitaryOp dag = u.adjoint();
    std::vector<Effect> out;
    for (const auto& e : effects_) {
        Effect pe{e.outcome, {}};
        for (const auto& v : e.range) pe.range.push_back(apply(dag, v));
        out.push_back(std::move(pe));
    }
    return ProjectiveMeasurement(context_, space_, std::move(out));
}

OutcomeDistribution::OutcomeDistribution(std::vector<std::pair<std::string, Real>> entries)
    : entries_(std::move(entries)) {}

const Real& OutcomeDistribution::at(const std::string& outcome) const {
    for (const auto& [o, p] : entries_) {
        if (o == outcome) return p;
    }
    throw UnknownLabel("outcome '" + outcome + "' not in distribution");
}

bool OutcomeDistribution::contains(const std::string& outcome) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == outcome; });
}

Real OutcomeDistribution::total() const {
    Real t;
    for (const auto& e : entries_) t = t + e.second;
    return t;
}

std::vector<std::string> OutcomeDistribution::outcomes() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

std::vector<Rational> OutcomeDistribution::rationals() const {
    std::vector<Rational> out;
    for (const auto& e : entries_) out.push_back(e.second.to_rational());
    return out;
}

// ---- Operations -----------------------------------------------------------

Amplitude inner_product(const StateVector& u, const StateVector& v) {
    require_same_space(u.space(), v.space(), "inner_product");
    Amplitude acc;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u.amps()[i].is_zero() || v.amps()[i].is_zero()) continue;
        acc += u.amps()[i].conj() * v.amps()[i];
    }
    return acc;
}

StateVector apply(const UnitaryOp& u, const StateVector& v) {
    require_same_space(u.space(), v.space(), "apply");
    const std::size_t n = u.dim();
    std::vector<Amplitude> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Amplitude acc;
        for (std::size_t c = 0; c < n; ++c) {
            if (u(r, c).is_zero() || v.amps()[c].is_zero()) continue;
            acc += u(r, c) * v.amps()[c];
        }
        out[r] = acc;
    }
    return StateVector(v.space(), std::move(out), v.subnormalized());
}

OutcomeDistribution born_probabilities(const StateVector& v, const ProjectiveMeasurement& m) {
    require_same_space(v.space(), m.space(), "born_probabilities");
    std::vector<std::pair<std::string, Real>> entries;
    for (const auto& e : m.effects()) {
        Real p;
        for (const auto& r : e.range) p = p + inner_product(r, v).norm2();
        entries.emplace_back(e.outcome, p);
    }
    return OutcomeDistribution(std::move(entries));
}

StateVector tensor(const StateVector& u, const StateVector& v) {
    Space space;
    std::vector<Amplitude> amps;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            space.push_back(ModeLabel::pair(u.space()[i], v.space()[j]));
            amps.push_back(u.amps()[i] * v.amps()[j]);
        }
    }
    return StateVector(std::move(space), std::move(amps), u.subnormalized() || v.subnormalized());
}

bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol) {
    require_same_space(u.space(), v.space(), "equal_up_to_phase");
    Real nu = u.norm2();
    Real nv = v.norm2();
    Real overlap = inner_product(u, v).norm2();
    if (nu.is_exact() && nv.is_exact() && overlap.is_exact() && tol == 0.0) {
        return nu == nv && overlap == nu * nv;
    }
    return std::abs(nu.to_double() - nv.to_double()) <= tol &&
           std::abs(overlap.to_double() - nu.to_double() * nv.to_double()) <= tol;
}

double max_distance(const StateVector& u, const StateVector& v) {
    require_same_space(u.space(), v.space(), "max_distance");
    double d = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) d = std::max(d, distance(u.amps()[i], v.amps()[i]));
    return d;
}

}  // namespace ontic
