#pragma once

#include <optional>
#include <vector>

#include "gfc/curve.hpp"
#include "gfc/local_geometry.hpp"

namespace gfc {

/// Monomial basis of the degree-m part of the coordinate ring, in the
/// complete-intersection normal form: exponents of x_2..x_n below k,
/// exponents of x_0 and x_1 free. Vectors are listed in ascending
/// lexicographic order.
struct MonomialBasis {
    long degree = 0;
    std::vector<std::vector<long>> exponent_vectors;
};

/// Weierstrass gap data at one point: the g gaps a_1 < ... < a_g, the
/// weight w = sum (a_i - i), and the applicable benchmark value (the
/// n >= 3 lower bound, or the classic fixed-point weight when n = 2).
struct WeierstrassReport {
    std::vector<long> gaps;
    Integer weight;
    Integer bound;
    bool bound_is_classic = false;  // n = 2: bound is the known exact weight
    bool bound_tight = false;       // weight == bound

    friend bool operator==(const WeierstrassReport&, const WeierstrassReport&) = default;
};

/// Ranks d_{-1}..d_n of the associated curves together with the total
/// ramification inputs. ranks[i] stores d_{i-1}. consistent means the
/// recurrence closed with d_n = 0 and no negative rank appeared.
struct PluckerTable {
    std::vector<Integer> ranks;
    std::vector<Integer> totals;  // b_1 .. b_{n-1}
    bool consistent = false;
};

/// r = (n-1)(k-1) - 2, the hypersurface degree cutting the canonical system.
long canonical_degree(const CurveParams& curve);

MonomialBasis monomial_basis(const CurveParams& curve, long m);

/// Coefficient of t^m in (1 + t + ... + t^{k-1})^{n-1} / (1-t)^2, the
/// Hilbert function of the coordinate ring; the monomial-basis count must
/// equal it, and at m = r it equals the genus.
Integer hilbert_coefficient(long k, long n, long m);

/// dim Q(r-j) = k^{n-2} (n(k-1) - 2 - 2j) / 2 + [j = k-1], the dimension
/// of the j-th graded piece in the x_1-decomposition of the canonical
/// space. Requires n >= 3 and 0 <= j <= k-1.
Integer q_dimension(long k, long n, long j);

/// Exact gap sequence and weight at a fixed point: evaluates the full
/// degree-r monomial basis on the relocated local frame (per-monomial
/// constant prefactors dropped; independently rescaling spanning vectors
/// preserves the span and hence its order filtration), then reduces the g
/// series by order-pivoted elimination to the strictly increasing contact
/// orders o_1 < ... < o_g. Gaps are o_i + 1.
WeierstrassReport gap_sequence(const CurveParams& curve, const FixedPointDescriptor& p,
                               std::size_t truncation_floor = 0);

/// Same from an explicit relocation (normalization-invariance checks).
WeierstrassReport gap_sequence_relocated(const CurveParams& relocated,
                                         std::size_t truncation_floor = 0);

/// w-hat = (k-1)(k^{n-1} - 2)(k^n + k^{n-1} - 12) / 24 for n >= 3; the
/// division is asserted exact. Throws NotApplicableError for n = 2.
Integer weight_lower_bound(long k, long n);

/// Fixed-point weight of the classic degree-k Fermat curve:
/// (k-1)(k-2)(k-3)(k+4) / 24, k >= 4.
Integer classic_weight(long k);

/// Fills d_{-1} = 0, d_0 = k^{n-1}, d_1 from the l = 0 Pluecker row
/// (b_0 = 0), then d_{l+1} = 2 d_l - d_{l-1} + 2g - 2 - b_l for
/// 1 <= l <= n-1. b_totals supplies b_1..b_{n-1}. The table is marked
/// inconsistent unless d_n = 0 and every rank is nonnegative.
PluckerTable plucker_table(const CurveParams& curve, const std::vector<Integer>& b_totals);

struct TotalRamification {
    Integer b1;                    // (n+1) k^{n-1} (k-2)
    std::optional<Integer> rest;   // (n+1) k^{n-1} (k-1), absent when n = 2
};

TotalRamification total_ramification(long k, long n);

}  // namespace gfc
