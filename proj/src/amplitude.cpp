#include "ontic/amplitude.hpp"

#include <cmath>
#include <sstream>

#include "ontic/errors.hpp"

namespace ontic {

// ---- Real -----------------------------------------------------------------

const Surd& Real::exact() const {
    if (const auto* s = std::get_if<Surd>(&value_)) return *s;
    throw NotRepresentable("float-backed real has no exact value");
}

double Real::to_double() const {
    if (const auto* s = std::get_if<Surd>(&value_)) return s->to_double();
    return std::get<double>(value_);
}

std::optional<Rational> Real::rational() const {
    if (const auto* s = std::get_if<Surd>(&value_)) return s->rational();
    return std::nullopt;
}

Rational Real::to_rational() const {
    if (auto q = rational()) return *q;
    throw NotRepresentable("value " + to_string() + " is not an exact rational");
}

bool Real::is_zero() const {
    if (const auto* s = std::get_if<Surd>(&value_)) return s->is_zero();
    return std::get<double>(value_) == 0.0;
}

std::string Real::to_string() const {
    if (const auto* s = std::get_if<Surd>(&value_)) return s->to_string();
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(value_);
    return os.str();
}

Real Real::operator-() const {
    if (is_exact()) return Real(-exact());
    return from_double(-to_double());
}

Real operator+(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(a.exact() + b.exact());
    return Real::from_double(a.to_double() + b.to_double());
}

Real operator-(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(a.exact() - b.exact());
    return Real::from_double(a.to_double() - b.to_double());
}

Real operator*(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return Real(a.exact() * b.exact());
    return Real::from_double(a.to_double() * b.to_double());
}

bool operator==(const Real& a, const Real& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.exact() == b.exact();
    return a.to_double() == b.to_double();
}

// ---- Amplitude ------------------------------------------------------------

Amplitude::Amplitude(const Real& re) {
    if (re.is_exact()) {
        value_ = ExactComplex{re.exact(), {}};
    } else {
        value_ = std::complex<double>(re.to_double(), 0.0);
    }
}

Amplitude::Amplitude(const Real& re, const Real& im) {
    if (re.is_exact() && im.is_exact()) {
        value_ = ExactComplex{re.exact(), im.exact()};
    } else {
        value_ = std::complex<double>(re.to_double(), im.to_double());
    }
}

Amplitude Amplitude::i() { return Amplitude(ExactComplex{Surd{}, Surd(1)}); }

const ExactComplex& Amplitude::exact() const {
    if (const auto* z = std::get_if<ExactComplex>(&value_)) return *z;
    throw NotRepresentable("float-backed amplitude has no exact value");
}

std::complex<double> Amplitude::to_complex() const {
    if (const auto* z = std::get_if<ExactComplex>(&value_)) return {z->re.to_double(), z->im.to_double()};
    return std::get<std::complex<double>>(value_);
}

Real Amplitude::real() const {
    if (is_exact()) return Real(exact().re);
    return Real::from_double(to_complex().real());
}

Real Amplitude::imag() const {
    if (is_exact()) return Real(exact().im);
    return Real::from_double(to_complex().imag());
}

Amplitude Amplitude::conj() const {
    if (is_exact()) return Amplitude(ExactComplex{exact().re, -exact().im});
    return from_complex(std::conj(to_complex()));
}

Real Amplitude::norm2() const {
    if (is_exact()) {
        const auto& z = exact();
        return Real(z.re * z.re + z.im * z.im);
    }
    return Real::from_double(std::norm(to_complex()));
}

bool Amplitude::is_zero() const {
    if (is_exact()) return exact().re.is_zero() && exact().im.is_zero();
    return to_complex() == std::complex<double>(0.0, 0.0);
}

std::string Amplitude::to_string() const {
    if (is_exact()) {
        const auto& z = exact();
        if (z.im.is_zero()) return z.re.to_string();
        if (z.re.is_zero()) return "(" + z.im.to_string() + ")i";
        return z.re.to_string() + "+(" + z.im.to_string() + ")i";
    }
    std::ostringstream os;
    os.precision(17);
    os << to_complex();
    return os.str();
}

Amplitude Amplitude::operator-() const {
    if (is_exact()) return Amplitude(ExactComplex{-exact().re, -exact().im});
    return from_complex(-to_complex());
}

Amplitude operator+(const Amplitude& a, const Amplitude& b) {
    if (a.is_exact() && b.is_exact()) {
        return Amplitude(ExactComplex{a.exact().re + b.exact().re, a.exact().im + b.exact().im});
    }
    return Amplitude::from_complex(a.to_complex() + b.to_complex());
}

Amplitude operator-(const Amplitude& a, const Amplitude& b) { return a + (-b); }

Amplitude operator*(const Amplitude& a, const Amplitude& b) {
    if (a.is_exact() && b.is_exact()) {
        const auto& x = a.exact();
        const auto& y = b.exact();
        return Amplitude(ExactComplex{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
    }
    return Amplitude::from_complex(a.to_complex() * b.to_complex());
}

bool operator==(const Amplitude& a, const Amplitude& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.exact() == b.exact();
    return a.to_complex() == b.to_complex();
}

double distance(const Amplitude& a, const Amplitude& b) { return std::abs(a.to_complex() - b.to_complex()); }

}  // namespace ontic
