#include "gfc/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfc {

TruncatedSeries::TruncatedSeries(std::size_t truncation)
    : coefficients_(truncation, Rational(0)) {
    if (truncation == 0) throw std::invalid_argument("truncation must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("truncation must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, std::size_t truncation) {
    TruncatedSeries s(truncation);
    s.coefficients_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coefficient,
                                          std::size_t exponent, std::size_t truncation) {
    if (exponent >= truncation) {
        throw std::invalid_argument("monomial exponent outside truncation window");
    }
    TruncatedSeries s(truncation);
    s.coefficients_[exponent] = coefficient;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t truncation) const {
    if (truncation == 0 || truncation > coefficients_.size()) {
        throw std::invalid_argument("truncated(): bad target truncation");
    }
    return TruncatedSeries(
        std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + truncation));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
    const std::size_t n = std::min(truncation(), other.truncation());
    for (std::size_t i = 0; i < n; ++i) {
        if (coefficients_[i] != other.coefficients_[i]) return false;
    }
    return true;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0) continue;
        if (!first) out << " + ";
        out << gfc::to_string(coefficients_[i]) << "*z^" << i;
        first = false;
    }
    if (first) out << "0";
    out << " (trunc " << coefficients_.size() << ")";
    return out.str();
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coefficient(i) - b.coefficient(i);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coefficient(i) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coefficient(j) == 0) continue;
            out[i + j] += a.coefficient(i) * b.coefficient(j);
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor) {
    std::vector<Rational> out(a.truncation());
    for (std::size_t i = 0; i < a.truncation(); ++i) out[i] = a.coefficient(i) * factor;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
    return series_scale(a, Rational(-1));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long exponent) {
    TruncatedSeries result = TruncatedSeries::one(a.truncation());
    for (unsigned long i = 0; i < exponent; ++i) result = series_mul(result, a);
    return result;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.truncation() < 2) {
        throw std::invalid_argument("truncation underflow: cannot differentiate below 2 terms");
    }
    std::vector<Rational> out(a.truncation() - 1);
    for (std::size_t i = 1; i < a.truncation(); ++i) {
        out[i - 1] = a.coefficient(i) * Rational(static_cast<long>(i));
    }
    return TruncatedSeries(std::move(out));
}

std::optional<long> series_order(const TruncatedSeries& a) {
    for (std::size_t i = 0; i < a.truncation(); ++i) {
        if (a.coefficient(i) != 0) return static_cast<long>(i);
    }
    return std::nullopt;
}

Rational generalized_binomial(long k, long i) {
    if (k < 2 || i < 0) throw std::invalid_argument("generalized_binomial: k >= 2, i >= 0");
    const Rational inv_k(1, k);
    Rational result(1);
    for (long m = 0; m < i; ++m) {
        result *= (inv_k - Rational(m)) / Rational(m + 1);
    }
    return result;
}

TruncatedSeries kth_root_unit_series(const TruncatedSeries& u, long k) {
    if (k < 2) throw std::invalid_argument("kth_root_unit_series: k >= 2");
    if (u.coefficient(0) != 0) {
        throw std::invalid_argument("kth_root_unit_series: argument must have zero constant term");
    }
    const std::size_t n = u.truncation();
    std::vector<Rational> y(n, Rational(0));
    y[0] = 1;
    // k (1+u) y' = u' y, coefficient of z^m:
    //   k (m+1) y_{m+1} = sum_j (j+1) u_{j+1} y_{m-j} - k sum_{j>=1} u_j (m+1-j) y_{m+1-j}
    for (std::size_t m = 0; m + 1 < n; ++m) {
        Rational acc(0);
        for (std::size_t j = 0; j <= m; ++j) {
            if (u.coefficient(j + 1) != 0) {
                acc += Rational(static_cast<long>(j + 1)) * u.coefficient(j + 1) * y[m - j];
            }
        }
        for (std::size_t j = 1; j <= m; ++j) {
            if (u.coefficient(j) != 0) {
                acc -= Rational(k) * Rational(static_cast<long>(m + 1 - j)) *
                       u.coefficient(j) * y[m + 1 - j];
            }
        }
        y[m + 1] = acc / (Rational(k) * Rational(static_cast<long>(m + 1)));
    }
    return TruncatedSeries(std::move(y));
}

}  // namespace gfc
