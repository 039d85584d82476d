#include "gfc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gfc {

namespace {

bool is_valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_text = text.substr(0, slash);
    if (!is_valid_integer_text(num_text)) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    Integer num(num_text, 10);
    Integer den(1);
    if (slash != std::string::npos) {
        const std::string den_text = text.substr(slash + 1);
        if (!is_valid_integer_text(den_text)) {
            throw std::invalid_argument("not a rational: '" + text + "'");
        }
        den = Integer(den_text, 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + text + "'");
        }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& value, unsigned long exponent) {
    Rational result(1);
    Rational base = value;
    unsigned long e = exponent;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::string to_string(const ExtRational& value) {
    return value.infinite ? "inf" : to_string(value.value);
}

Mobius Mobius::to_zero_inf_one(const ExtRational& z1, const ExtRational& z2,
                               const ExtRational& z3) {
    if (z1 == z2 || z1 == z3 || z2 == z3) {
        throw std::invalid_argument("Mobius normalization needs three distinct points");
    }
    // At most one of the three can be infinite.
    if (z1.infinite) {
        // (z3 - z2) / (mu - z2)
        return Mobius{Rational(0), z3.value - z2.value, Rational(1), -z2.value};
    }
    if (z2.infinite) {
        // (mu - z1) / (z3 - z1)
        return Mobius{Rational(1), -z1.value, Rational(0), z3.value - z1.value};
    }
    if (z3.infinite) {
        // (mu - z1) / (mu - z2)
        return Mobius{Rational(1), -z1.value, Rational(1), -z2.value};
    }
    const Rational p = z3.value - z2.value;
    const Rational q = z3.value - z1.value;
    return Mobius{p, -z1.value * p, q, -z2.value * q};
}

ExtRational Mobius::apply(const ExtRational& mu) const {
    if (mu.infinite) {
        if (c == 0) return ExtRational::infinity();
        return ExtRational::finite(a / c);
    }
    const Rational den = c * mu.value + d;
    if (den == 0) return ExtRational::infinity();
    return ExtRational::finite((a * mu.value + b) / den);
}

}  // namespace gfc
