#include "ontic/rational.hpp"

#include <cctype>

#include "ontic/errors.hpp"

namespace ontic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw InvalidConfig("not a rational number: '" + std::string(original) + "'");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidConfig("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw InvalidConfig("not a rational number: '" + std::string(text) + "'");
        }
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw InvalidConfig("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw InvalidConfig("not a rational number: '" + std::string(text) + "'");
        }
        mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
        mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational q(whole * scale + frac, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    return q.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace ontic
