#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ontic/rational.hpp"

namespace ontic {

// Exact real number of the form sum_k c_k * sqrt(k), with c_k rational and k
// ranging over squarefree positive integers (k = 1 is the rational part).
// Square roots of distinct squarefree integers are linearly independent over
// Q, so the canonical form (no zero coefficients) makes equality structural.
// The set is a ring: sqrt(j) * sqrt(k) = g * sqrt(jk / g^2) with g = gcd(j, k).
class Surd {
public:
    Surd() = default;
    Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
    Surd(long value) : Surd(Rational(value)) {}  // NOLINT(google-explicit-constructor)

    // sqrt(q) for q >= 0. Throws NotRepresentable when the radicand cannot be
    // reduced (numerator*denominator above 10^12) and PreconditionError for q < 0.
    static Surd sqrt(const Rational& q);
    // c * sqrt(k); k need not be squarefree.
    static Surd radical(const Rational& c, std::uint64_t k);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The rational value, or nullopt when an irrational part is present.
    std::optional<Rational> rational() const;
    double to_double() const;
    // Sign of the value (-1, 0, 1). Exact for rational values; otherwise
    // decided by interval evaluation in long double, which is reliable for
    // the small radicands that arise here.
    int sign() const;

    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

    Surd operator-() const;
    Surd& operator+=(const Surd& rhs);
    Surd& operator-=(const Surd& rhs);
    Surd& operator*=(const Surd& rhs);
    friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
    friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
    friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
    friend bool operator==(const Surd& lhs, const Surd& rhs) { return lhs.terms_ == rhs.terms_; }

    // "1/3", "1/2*sqrt(2)", "1/3+1/6*sqrt(2)".
    std::string to_string() const;

private:
    void add_term(std::uint64_t radicand, const Rational& coeff);

    std::map<std::uint64_t, Rational> terms_;
};

}  // namespace ontic
