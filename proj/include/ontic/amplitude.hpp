#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "ontic/surd.hpp"

namespace ontic {

// Real scalar with dual backing: exact (Surd) or floating point. Arithmetic
// between an exact and a float operand yields a float result.
class Real {
public:
    Real() : value_(Surd{}) {}
    Real(Surd exact) : value_(std::move(exact)) {}  // NOLINT(google-explicit-constructor)
    Real(const Rational& q) : value_(Surd(q)) {}    // NOLINT(google-explicit-constructor)
    Real(long v) : value_(Surd(v)) {}                // NOLINT(google-explicit-constructor)
    static Real from_double(double v) { Real r; r.value_ = v; return r; }

    bool is_exact() const { return std::holds_alternative<Surd>(value_); }
    const Surd& exact() const;
    double to_double() const;
    // Exact rational value, or nullopt for irrational/float values.
    std::optional<Rational> rational() const;
    // Exact rational value; throws NotRepresentable otherwise.
    Rational to_rational() const;
    bool is_zero() const;
    std::string to_string() const;

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    // Exact equality for exact operands; bitwise equality for floats.
    friend bool operator==(const Real& a, const Real& b);

private:
    std::variant<Surd, double> value_;
};

struct ExactComplex {
    Surd re;
    Surd im;
    friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

// Complex amplitude with dual backing. Exact values live in Q[sqrt(k) : k
// squarefree][i], which is closed under +, -, * and conjugation.
class Amplitude {
public:
    Amplitude() : value_(ExactComplex{}) {}
    Amplitude(ExactComplex z) : value_(std::move(z)) {}        // NOLINT(google-explicit-constructor)
    Amplitude(const Real& re);                                 // NOLINT(google-explicit-constructor)
    Amplitude(const Surd& re) : value_(ExactComplex{re, {}}) {}  // NOLINT(google-explicit-constructor)
    Amplitude(const Rational& re) : Amplitude(Surd(re)) {}     // NOLINT(google-explicit-constructor)
    Amplitude(long re) : Amplitude(Surd(re)) {}                // NOLINT(google-explicit-constructor)
    Amplitude(const Real& re, const Real& im);
    static Amplitude from_complex(std::complex<double> z) { Amplitude a; a.value_ = z; return a; }
    static Amplitude i();

    bool is_exact() const { return std::holds_alternative<ExactComplex>(value_); }
    const ExactComplex& exact() const;
    std::complex<double> to_complex() const;
    Amplitude to_float() const { return from_complex(to_complex()); }

    Real real() const;
    Real imag() const;
    Amplitude conj() const;
    // |z|^2, always real and nonnegative.
    Real norm2() const;
    bool is_zero() const;
    std::string to_string() const;

    Amplitude operator-() const;
    friend Amplitude operator+(const Amplitude& a, const Amplitude& b);
    friend Amplitude operator-(const Amplitude& a, const Amplitude& b);
    friend Amplitude operator*(const Amplitude& a, const Amplitude& b);
    Amplitude& operator+=(const Amplitude& b) { return *this = *this + b; }
    friend bool operator==(const Amplitude& a, const Amplitude& b);

private:
    std::variant<ExactComplex, std::complex<double>> value_;
};

// |a - b| for amplitudes regardless of backing.
double distance(const Amplitude& a, const Amplitude& b);

}  // namespace ontic
