#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ontic/amplitude.hpp"

namespace ontic {

// A phase angle, either an exact rational multiple of pi or a float radian
// value. e^{i chi} is exact when the reduced denominator of chi/pi is one of
// 1, 2, 3, 4, 6; other exact multiples fall back to floating point.
class Phase {
public:
    Phase() : multiple_(Rational(0)) {}
    static Phase pi_fraction(long num, long den = 1);
    static Phase pi_multiple(const Rational& multiple);
    static Phase radians(double value);

    // Accepts "0", "pi", "-pi/2", "2pi/3", "2*pi/3", "pi/4" and plain radian
    // decimals such as "1.25". Throws InvalidConfig otherwise.
    static Phase parse(std::string_view text);

    bool is_exact_multiple() const { return multiple_.has_value(); }
    // chi / pi, when the phase was given as a rational multiple of pi.
    const std::optional<Rational>& pi_multiple() const { return multiple_; }
    double to_radians() const;

    // Whether cos/sin (and hence e^{i chi}) are exactly representable.
    bool has_exact_exponential() const;
    Amplitude exp_i() const;
    Real cos() const;

    Phase operator-() const;

    // "0", "pi", "pi/2", "2pi/3", or the radian decimal.
    std::string label() const;

    friend bool operator==(const Phase& a, const Phase& b);

private:
    std::optional<Rational> multiple_;
    double radians_ = 0.0;
};

}  // namespace ontic
