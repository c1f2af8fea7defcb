#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ontic {

using Rational = mpq_class;

// Parses "p/q", an integer, or a finite decimal ("0.125", "-3.5e-2" is not
// accepted). The result is canonicalized. Throws InvalidConfig on bad input.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace ontic
