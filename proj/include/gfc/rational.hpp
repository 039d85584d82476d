#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gfc {

/// Exact rational scalar. Backed by GMP's mpq_class, which keeps the value
/// canonical after every operation: denominator > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. All arithmetic in the library is exact; there is no
/// epsilon anywhere.
using Rational = mpq_class;

/// Arbitrary-precision integer (genus-scale bookkeeping, counts, weights).
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Rejects zero
/// denominators and malformed text.
Rational parse_rational(const std::string& text);

/// Renders losslessly: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// value^exponent for exponent >= 0 (0^0 = 1).
Rational rational_pow(const Rational& value, unsigned long exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// A point of the projective line over the rationals: a finite value or
/// the point at infinity. Branch values of the quotient map live here.
struct ExtRational {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static ExtRational infinity() { return ExtRational{true, Rational(0)}; }
    static ExtRational finite(Rational v) { return ExtRational{false, std::move(v)}; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
};

std::string to_string(const ExtRational& value);

/// A Moebius transformation mu -> (a*mu + b) / (c*mu + d), ad - bc != 0,
/// acting on the extended rational line.
struct Mobius {
    Rational a, b, c, d;

    /// The unique map sending (z1, z2, z3) to (0, infinity, 1). The three
    /// source points must be pairwise distinct.
    static Mobius to_zero_inf_one(const ExtRational& z1, const ExtRational& z2,
                                  const ExtRational& z3);

    ExtRational apply(const ExtRational& mu) const;
};

}  // namespace gfc
