#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/rational.hpp"

namespace gfc {

/// Dense power series over the exact rationals with an explicit truncation
/// order: coefficients for z^0 .. z^(N-1) are stored, trailing zeros
/// included. Values are immutable after construction; every operation is a
/// pure function. Arithmetic never reads past the shorter operand; the
/// result truncation is the minimum of the operand truncations.
class TruncatedSeries {
public:
    /// Zero series with the given truncation (N >= 1).
    explicit TruncatedSeries(std::size_t truncation);

    /// Takes ownership of a coefficient list; its length is the truncation.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries zero(std::size_t truncation) {
        return TruncatedSeries(truncation);
    }
    static TruncatedSeries constant(const Rational& value, std::size_t truncation);
    static TruncatedSeries one(std::size_t truncation) {
        return constant(Rational(1), truncation);
    }
    /// coefficient * z^exponent (exponent < truncation).
    static TruncatedSeries monomial(const Rational& coefficient, std::size_t exponent,
                                    std::size_t truncation);

    std::size_t truncation() const { return coefficients_.size(); }
    const Rational& coefficient(std::size_t exponent) const {
        return coefficients_.at(exponent);
    }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Copy shortened to the given truncation (must not exceed the current one).
    TruncatedSeries truncated(std::size_t truncation) const;

    bool is_zero() const;

    /// Exact coefficientwise comparison on the common truncation prefix.
    bool agrees_with(const TruncatedSeries& other) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coefficients_ == b.coefficients_;
    }

    std::string to_string() const;  // diagnostics only

private:
    std::vector<Rational> coefficients_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor);
TruncatedSeries series_neg(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long exponent);

/// Termwise derivative; truncation drops by one. Input truncation must be
/// at least 2.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// Smallest exponent with a nonzero coefficient, or nullopt when every
/// stored coefficient is zero. nullopt means "unresolved at this
/// truncation", not failure: the series may be identically zero or may
/// begin past the stored window.
std::optional<long> series_order(const TruncatedSeries& a);

/// The binomial coefficient C(1/k, i) = prod_{m=0}^{i-1} (1/k - m) / i!,
/// the z^i coefficient of (1+t)^{1/k}.
Rational generalized_binomial(long k, long i);

/// The principal k-th root of 1 + u for a series u with u(0) = 0: the
/// unique series y with y(0) = 1 and y^k = 1 + u up to truncation.
/// Computed from the relation k (1+u) y' = u' y, which gives an O(N^2)
/// coefficient recurrence; equals sum_i C(1/k, i) u^i.
TruncatedSeries kth_root_unit_series(const TruncatedSeries& u, long k);

}  // namespace gfc
