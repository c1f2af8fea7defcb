#include "ontic/phase.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ontic/errors.hpp"

namespace ontic {

namespace {

// Reduce chi/pi into [0, 2).
Rational reduce_turn(const Rational& m) {
    mpz_class two_den = 2 * m.get_den();
    mpz_class num = m.get_num() % two_den;
    if (num < 0) num += two_den;
    Rational r(num, m.get_den());
    r.canonicalize();
    return r;
}

// Exact cos/sin of pi*m for the supported denominators.
bool exact_cos_sin(const Rational& m, Surd& c, Surd& s) {
    Rational r = reduce_turn(m);
    const mpz_class& den = r.get_den();
    if (den != 1 && den != 2 && den != 3 && den != 4 && den != 6) return false;
    // Index on the 12-gon: r = k / 12 * 2 -> k = 6 * r.
    Rational k_q = r * 6;
    if (k_q.get_den() != 1) {
        // den == 4: eighth-turns, handled separately
        Rational k8 = r * 4;
        long k = k8.get_num().get_si();  // odd multiples of pi/4
        Surd h = Surd::radical(Rational(1, 2), 2);
        const int cs[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
        c = h * Surd(static_cast<long>(cs[k][0]));
        s = h * Surd(static_cast<long>(cs[k][1]));
        return true;
    }
    long k = k_q.get_num().get_si();  // 0..11, multiples of pi/6
    Surd half(Rational(1, 2));
    Surd r3 = Surd::radical(Rational(1, 2), 3);
    const Surd cos_table[12] = {Surd(1), r3, half, Surd(0), -half, -r3, Surd(-1), -r3, -half, Surd(0), half, r3};
    c = cos_table[k];
    s = cos_table[(k + 9) % 12];  // sin(x) = cos(x - pi/2)
    return true;
}

}  // namespace

Phase Phase::pi_fraction(long num, long den) {
    if (den == 0) throw InvalidConfig("phase with zero denominator");
    return pi_multiple(Rational(num, den));
}

Phase Phase::pi_multiple(const Rational& multiple) {
    Phase p;
    Rational m = multiple;
    m.canonicalize();
    p.multiple_ = m;
    p.radians_ = m.get_d() * std::numbers::pi;
    return p;
}

Phase Phase::radians(double value) {
    if (!std::isfinite(value)) throw InvalidConfig("phase must be finite");
    Phase p;
    p.multiple_.reset();
    p.radians_ = value;
    return p;
}

Phase Phase::parse(std::string_view text) {
    std::string t;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') {
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (t.empty()) throw InvalidConfig("empty phase");
    auto pos = t.find("pi");
    if (pos == std::string::npos) {
        try {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) throw InvalidConfig("bad phase '" + std::string(text) + "'");
            if (v == 0.0) return pi_fraction(0);
            return radians(v);
        } catch (const std::logic_error&) {
            throw InvalidConfig("bad phase '" + std::string(text) + "'");
        }
    }
    std::string coeff = t.substr(0, pos);
    std::string rest = t.substr(pos + 2);
    Rational num = 1;
    if (coeff == "-") {
        num = -1;
    } else if (!coeff.empty() && coeff != "+") {
        num = parse_rational(coeff);
    }
    Rational den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') throw InvalidConfig("bad phase '" + std::string(text) + "'");
        den = parse_rational(rest.substr(1));
        if (den == 0) throw InvalidConfig("bad phase '" + std::string(text) + "'");
    }
    return pi_multiple(num / den);
}

double Phase::to_radians() const { return radians_; }

bool Phase::has_exact_exponential() const {
    if (!multiple_) return false;
    Surd c;
    Surd s;
    return exact_cos_sin(*multiple_, c, s);
}

Amplitude Phase::exp_i() const {
    Surd c;
    Surd s;
    if (multiple_ && exact_cos_sin(*multiple_, c, s)) return Amplitude(ExactComplex{c, s});
    return Amplitude::from_complex(std::polar(1.0, radians_));
}

Real Phase::cos() const {
    Surd c;
    Surd s;
    if (multiple_ && exact_cos_sin(*multiple_, c, s)) return Real(c);
    return Real::from_double(std::cos(radians_));
}

Phase Phase::operator-() const {
    if (multiple_) return pi_multiple(-*multiple_);
    return radians(-radians_);
}

std::string Phase::label() const {
    if (!multiple_) {
        std::ostringstream os;
        os.precision(17);
        os << radians_;
        return os.str();
    }
    const Rational& m = *multiple_;
    if (m == 0) return "0";
    std::string num;
    if (m.get_num() == 1) {
        num = "pi";
    } else if (m.get_num() == -1) {
        num = "-pi";
    } else {
        num = m.get_num().get_str() + "pi";
    }
    if (m.get_den() == 1) return num;
    return num + "/" + m.get_den().get_str();
}

bool operator==(const Phase& a, const Phase& b) {
    if (a.multiple_.has_value() != b.multiple_.has_value()) return false;
    if (a.multiple_) return *a.multiple_ == *b.multiple_;
    return a.radians_ == b.radians_;
}

}  // namespace ontic
