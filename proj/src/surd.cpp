#include "ontic/surd.hpp"

#include <cmath>
#include <numeric>

#include "ontic/errors.hpp"

namespace ontic {

namespace {

constexpr std::uint64_t kMaxRadicand = 1'000'000'000'000ULL;

// n = square^2 * free with free squarefree.
void split_square(std::uint64_t n, std::uint64_t& square, std::uint64_t& free) {
    square = 1;
    free = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned count = 0;
        while (n % p == 0) {
            n /= p;
            ++count;
        }
        for (unsigned i = 0; i < count / 2; ++i) square *= p;
        if (count % 2 == 1) free *= p;
    }
    free *= n;
}

}  // namespace

Surd::Surd(const Rational& q) {
    if (q != 0) {
        Rational c = q;
        c.canonicalize();
        terms_.emplace(1, c);
    }
}

Surd Surd::sqrt(const Rational& q) {
    Rational v = q;
    v.canonicalize();
    if (v < 0) throw PreconditionError("square root of a negative rational");
    if (v == 0) return {};
    // sqrt(p/q) = sqrt(p*q) / q
    mpz_class pq = v.get_num() * v.get_den();
    if (pq > mpz_class(std::to_string(kMaxRadicand))) {
        throw NotRepresentable("radicand too large for exact square root: " + v.get_str());
    }
    std::uint64_t square = 0;
    std::uint64_t free = 0;
    split_square(pq.get_ui(), square, free);
    Rational coeff(mpz_class(std::to_string(square)), v.get_den());
    coeff.canonicalize();
    Surd out;
    out.terms_.emplace(free, coeff);
    return out;
}

Surd Surd::radical(const Rational& c, std::uint64_t k) {
    if (k == 0 || c == 0) return {};
    std::uint64_t square = 0;
    std::uint64_t free = 0;
    split_square(k, square, free);
    Rational coeff = c * mpz_class(std::to_string(square));
    coeff.canonicalize();
    Surd out;
    out.add_term(free, coeff);
    return out;
}

bool Surd::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> Surd::rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) return std::nullopt;
    return terms_.begin()->second;
}

double Surd::to_double() const {
    long double acc = 0;
    for (const auto& [k, c] : terms_) {
        acc += static_cast<long double>(c.get_d()) * std::sqrt(static_cast<long double>(k));
    }
    return static_cast<double>(acc);
}

int Surd::sign() const {
    if (auto q = rational()) return sgn(*q);
    long double acc = 0;
    long double err = 0;
    for (const auto& [k, c] : terms_) {
        long double term = static_cast<long double>(c.get_d()) * std::sqrt(static_cast<long double>(k));
        acc += term;
        err += std::fabs(term) * 1e-15L;
    }
    if (acc > err) return 1;
    if (acc < -err) return -1;
    // Nonzero by canonical form but too close to call in long double.
    throw NotRepresentable("cannot decide the sign of " + to_string());
}

void Surd::add_term(std::uint64_t radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Surd Surd::operator-() const {
    Surd out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Surd& Surd::operator+=(const Surd& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
    Surd out;
    for (const auto& [j, a] : terms_) {
        for (const auto& [k, b] : rhs.terms_) {
            std::uint64_t g = std::gcd(j, k);
            std::uint64_t free = (j / g) * (k / g);
            if (free > kMaxRadicand) throw NotRepresentable("radicand overflow in exact product");
            out.add_term(free, a * b * mpz_class(std::to_string(g)));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

std::string Surd::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string coeff = ontic::to_string(c);
        if (!first && c > 0) out += "+";
        first = false;
        if (k == 1) {
            out += coeff;
        } else {
            out += coeff + "*sqrt(" + std::to_string(k) + ")";
        }
    }
    return out;
}

}  // namespace ontic
