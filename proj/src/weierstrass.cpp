#include "gfc/weierstrass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gfc/errors.hpp"
#include "gfc/series.hpp"

namespace gfc {

long canonical_degree(const CurveParams& curve) {
    validate(curve);
    return (curve.n - 1) * (curve.k - 1) - 2;
}

namespace {

void enumerate_exponents(const CurveParams& curve, long coordinate, long remaining,
                         std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (coordinate == curve.n) {
        // Last coordinate takes the remainder if the normal form allows it.
        if (remaining < curve.k) {
            current.push_back(remaining);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    const long cap = (coordinate >= 2) ? std::min(remaining, curve.k - 1) : remaining;
    for (long e = 0; e <= cap; ++e) {
        current.push_back(e);
        enumerate_exponents(curve, coordinate + 1, remaining - e, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialBasis monomial_basis(const CurveParams& curve, long m) {
    validate(curve);
    if (m < 0) throw std::invalid_argument("monomial_basis: degree must be >= 0");
    MonomialBasis basis;
    basis.degree = m;
    std::vector<long> current;
    enumerate_exponents(curve, 0, m, current, basis.exponent_vectors);
    return basis;
}

Integer hilbert_coefficient(long k, long n, long m) {
    if (k < 2 || n < 2) throw std::invalid_argument("hilbert_coefficient: k, n >= 2");
    if (m < 0) return 0;
    // Numerator (1 + t + ... + t^{k-1})^{n-1} by repeated convolution.
    std::vector<Integer> numerator{Integer(1)};
    for (long factor = 0; factor < n - 1; ++factor) {
        std::vector<Integer> next(numerator.size() + k - 1, Integer(0));
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            for (long j = 0; j < k; ++j) next[i + j] += numerator[i];
        }
        numerator = std::move(next);
    }
    // 1/(1-t)^2 contributes m - j + 1 copies of each numerator term.
    Integer total(0);
    for (std::size_t j = 0; j < numerator.size() && j <= static_cast<std::size_t>(m); ++j) {
        total += numerator[j] * Integer(m - static_cast<long>(j) + 1);
    }
    return total;
}

Integer q_dimension(long k, long n, long j) {
    if (n < 3) throw NotApplicableError("q_dimension applies to n >= 3 only");
    if (j < 0 || j > k - 1) throw std::invalid_argument("q_dimension: 0 <= j <= k-1");
    Integer kpow(1);
    for (long i = 0; i < n - 2; ++i) kpow *= k;
    const Integer twice = kpow * Integer(n * (k - 1) - 2 - 2 * j);
    if (twice % 2 != 0) throw TheoremViolationError("q_dimension: closed form not integral");
    Integer result = twice / 2;
    if (j == k - 1) result += 1;
    return result;
}

Integer weight_lower_bound(long k, long n) {
    if (n < 3) throw NotApplicableError("weight_lower_bound applies to n >= 3 only");
    Integer kn1(1);
    for (long i = 0; i < n - 1; ++i) kn1 *= k;
    const Integer kn = kn1 * k;
    const Integer numerator = Integer(k - 1) * (kn1 - 2) * (kn + kn1 - 12);
    if (numerator % 24 != 0) throw TheoremViolationError("weight bound: /24 not integral");
    Integer result = numerator / 24;
    if (result < 0) throw TheoremViolationError("weight bound: negative");
    return result;
}

Integer classic_weight(long k) {
    if (k < 4) throw NotApplicableError("classic_weight applies to k >= 4");
    const Integer numerator = Integer(k - 1) * Integer(k - 2) * Integer(k - 3) * Integer(k + 4);
    if (numerator % 24 != 0) throw TheoremViolationError("classic weight: /24 not integral");
    return numerator / 24;
}

PluckerTable plucker_table(const CurveParams& curve, const std::vector<Integer>& b_totals) {
    validate(curve);
    if (b_totals.size() != static_cast<std::size_t>(curve.n - 1)) {
        throw std::invalid_argument("plucker_table: need b_1..b_{n-1}");
    }
    const Integer g = genus(curve);
    const Integer two_g_minus_2 = 2 * g - 2;

    PluckerTable table;
    table.totals = b_totals;
    table.ranks.assign(curve.n + 2, Integer(0));  // ranks[i] = d_{i-1}
    table.ranks[0] = 0;                           // d_{-1}
    table.ranks[1] = degree(curve);               // d_0
    table.ranks[2] = 2 * table.ranks[1] + two_g_minus_2;  // l = 0 row, b_0 = 0
    for (long l = 1; l <= curve.n - 1; ++l) {
        table.ranks[l + 2] =
            2 * table.ranks[l + 1] - table.ranks[l] + two_g_minus_2 - b_totals[l - 1];
    }
    table.consistent = table.ranks[curve.n + 1] == 0 &&
                       std::all_of(table.ranks.begin(), table.ranks.end(),
                                   [](const Integer& d) { return d >= 0; });
    return table;
}

TotalRamification total_ramification(long k, long n) {
    Integer kn1(1);
    for (long i = 0; i < n - 1; ++i) kn1 *= k;
    TotalRamification totals;
    totals.b1 = Integer(n + 1) * kn1 * Integer(k - 2);
    if (n >= 3) totals.rest = Integer(n + 1) * kn1 * Integer(k - 1);
    return totals;
}

namespace {

/// Orders of the filtration spanned by `rows`: repeatedly take the series
/// of least order (first wins on ties, so the lexicographically smallest
/// monomial pivots), then clear that order from everything else. Returns
/// nullopt when the remaining rows are all zero to their truncation.
std::optional<std::vector<long>> order_pivoted_orders(std::vector<std::vector<Rational>> rows) {
    std::vector<long> orders;
    std::vector<bool> alive(rows.size(), true);
    const std::size_t trunc = rows.empty() ? 0 : rows.front().size();
    for (std::size_t step = 0; step < rows.size(); ++step) {
        long best = -1;
        std::size_t pivot = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i]) continue;
            for (std::size_t e = 0; e < trunc; ++e) {
                if (rows[i][e] != 0) {
                    if (best < 0 || static_cast<long>(e) < best) {
                        best = static_cast<long>(e);
                        pivot = i;
                    }
                    break;
                }
            }
        }
        if (best < 0) return std::nullopt;  // unresolved at this truncation
        orders.push_back(best);
        alive[pivot] = false;
        const std::vector<Rational>& p = rows[pivot];
        const std::size_t e0 = static_cast<std::size_t>(best);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i] || rows[i][e0] == 0) continue;
            const Rational factor = rows[i][e0] / p[e0];
            for (std::size_t e = e0; e < trunc; ++e) {
                if (p[e] != 0) rows[i][e] -= factor * p[e];
            }
        }
    }
    return orders;
}

std::vector<std::vector<Rational>> evaluate_basis(const LocalFrame& frame,
                                                  const MonomialBasis& basis,
                                                  std::size_t truncation) {
    const std::size_t coords = frame.coordinates.size();
    std::vector<long> max_exponent(coords, 0);
    for (const auto& vec : basis.exponent_vectors) {
        for (std::size_t j = 0; j < coords; ++j) {
            max_exponent[j] = std::max(max_exponent[j], vec[j]);
        }
    }
    // Power tables per coordinate.
    std::vector<std::vector<TruncatedSeries>> powers(coords);
    for (std::size_t j = 0; j < coords; ++j) {
        powers[j].push_back(TruncatedSeries::one(truncation));
        for (long e = 1; e <= max_exponent[j]; ++e) {
            powers[j].push_back(series_mul(powers[j].back(), frame.coordinates[j]));
        }
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(basis.exponent_vectors.size());
    for (const auto& vec : basis.exponent_vectors) {
        TruncatedSeries value = TruncatedSeries::one(truncation);
        for (std::size_t j = 0; j < coords; ++j) {
            if (vec[j] > 0) value = series_mul(value, powers[j][vec[j]]);
        }
        rows.push_back(value.coefficients());
    }
    return rows;
}

}  // namespace

WeierstrassReport gap_sequence_relocated(const CurveParams& relocated,
                                         std::size_t truncation_floor) {
    const long r = canonical_degree(relocated);
    const Integer g = genus(relocated);
    const long g_long = static_cast<long>(g.get_si());
    const MonomialBasis basis = monomial_basis(relocated, r);
    if (static_cast<long>(basis.exponent_vectors.size()) != g_long) {
        throw TheoremViolationError("canonical basis count differs from genus");
    }

    std::size_t start = std::max(initial_truncation(relocated.k, relocated.n),
                                 static_cast<std::size_t>(4 * g_long));
    start = std::max(start, truncation_floor);

    for (std::size_t trunc = start; trunc <= kTruncationCap; trunc *= 2) {
        const LocalFrame frame = fixed_point_frame(relocated, trunc);
        auto orders = order_pivoted_orders(evaluate_basis(frame, basis, trunc));
        if (!orders) continue;
        std::sort(orders->begin(), orders->end());

        WeierstrassReport report;
        report.gaps.reserve(orders->size());
        for (const long o : *orders) report.gaps.push_back(o + 1);
        // Gap sanity: a_1 = 1, strictly increasing, a_g <= 2g - 1.
        bool sane = report.gaps.front() == 1 &&
                    report.gaps.back() <= 2 * g_long - 1;
        for (std::size_t i = 0; sane && i + 1 < report.gaps.size(); ++i) {
            sane = report.gaps[i] < report.gaps[i + 1];
        }
        if (!sane) {
            std::ostringstream msg;
            msg << "gap sequence out of classical bounds:";
            for (const long a : report.gaps) msg << " " << a;
            throw TheoremViolationError(msg.str());
        }
        report.weight = 0;
        for (std::size_t i = 0; i < report.gaps.size(); ++i) {
            report.weight += Integer(report.gaps[i]) - Integer(static_cast<long>(i) + 1);
        }
        if (relocated.n >= 3) {
            report.bound = weight_lower_bound(relocated.k, relocated.n);
            report.bound_is_classic = false;
        } else {
            report.bound = classic_weight(relocated.k);
            report.bound_is_classic = true;
        }
        report.bound_tight = report.weight == report.bound;
        return report;
    }
    throw PrecisionCapExceededError("gap orders unresolved at the truncation cap");
}

WeierstrassReport gap_sequence(const CurveParams& curve, const FixedPointDescriptor& p,
                               std::size_t truncation_floor) {
    return gap_sequence_relocated(relocate(curve, p), truncation_floor);
}

}  // namespace gfc
