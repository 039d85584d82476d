#pragma once

#include <optional>
#include <vector>

#include "gfc/curve.hpp"
#include "gfc/series.hpp"

namespace gfc {

/// Exact local parametrization of the curve: one truncated series per
/// projective coordinate. Every coordinate has been divided by its nonzero
/// constant prefactor (the k-th root constants of the exact equations), so
/// coordinate 0 is exactly 1 and the remaining coordinates are unit series
/// or z itself. Dropping the prefactors rescales single columns of every
/// Wronskian minor, which leaves all vanishing orders unchanged.
struct LocalFrame {
    enum class BaseKind { FixedPoint, Generic };

    std::vector<TruncatedSeries> coordinates;  // n+1 series
    BaseKind base_kind = BaseKind::FixedPoint;
    std::optional<Rational> mu0;  // set for generic base points
};

/// Wedge vanishing orders and the ramification indices they encode.
struct OsculationReport {
    std::vector<long> wedge_orders;  // ord_0 .. ord_n
    std::vector<long> ramification;  // b_0 .. b_{n-1}
    std::vector<long> alpha;         // alpha_1 .. alpha_n  (alpha_{l+1} = b_l)
    bool hyperosculating = false;

    friend bool operator==(const OsculationReport&, const OsculationReport&) = default;
};

/// Adaptive-precision policy: start at max(4k(n+1), 64) coefficients,
/// double on an unresolved order, give up loudly at the cap.
std::size_t initial_truncation(long k, long n);
inline constexpr std::size_t kTruncationCap = std::size_t{1} << 14;

/// Expansion at the canonical fixed point of a relocated curve (the point
/// over branch value 0): coordinate 0 is 1, coordinate 1 is z, and
/// coordinate j+1 (1 <= j <= n-1) is the principal k-th root of
/// 1 + z^k / lambda-hat_{j-1}, with lambda-hat_0 = 1.
LocalFrame fixed_point_frame(const CurveParams& relocated, std::size_t truncation);

/// Expansion at the rational point over mu0 (not a branch value), in the
/// quotient-line parameter s with mu = mu0 + s: coordinate 0 is 1 and
/// coordinate j >= 1 is the principal k-th root of 1 + s/(mu0 - beta_j),
/// beta_j the branch value of coordinate j. Throws BranchCollisionError
/// when mu0 lies in the branch set.
LocalFrame generic_point_frame(const CurveParams& curve, const Rational& mu0,
                               std::size_t truncation);

/// For each l = 0..max_l, the vanishing order of v ^ v' ^ ... ^ v^(l):
/// the minimum over all (l+1)-column subsets of the order of the
/// corresponding minor determinant. All maximal minors are built by
/// Laplace expansion with memoized sub-minors. Returns nullopt when some
/// level does not resolve at the frame's truncation (caller retries with
/// a longer frame).
std::optional<std::vector<long>> wronskian_orders(const LocalFrame& frame, long max_l);

/// Recovers ramification indices as second differences of the wedge
/// orders: b_l = ord_{l+1} - 2 ord_l + ord_{l-1} (ord_{-1} = 0). A
/// negative difference is mathematically impossible and throws
/// NegativeIndexError. hyperosculating iff sum_{l>=1} b_l >= 1.
OsculationReport ramification_from_orders(const std::vector<long>& orders);

/// Full pipeline at a fixed point: relocate, expand, wedge, differentiate
/// orders; retries with doubled truncation as needed. The result is
/// checked against b_1 = k-2 and b_l = k-1 (2 <= l <= n-1); a mismatch
/// throws TheoremViolationError rather than being accepted silently.
/// truncation_floor, when nonzero, raises the starting truncation.
OsculationReport analyze_point(const CurveParams& curve, const FixedPointDescriptor& p,
                               std::size_t truncation_floor = 0);

/// Same via an explicit relocation (used for normalization-invariance
/// checks, where the Moebius targets vary).
OsculationReport analyze_relocated(const CurveParams& relocated,
                                   std::size_t truncation_floor = 0);

/// Osculation data at a generic rational base point. No theorem check is
/// imposed; callers assert the expected all-zero ramification.
OsculationReport analyze_generic_point(const CurveParams& curve, const Rational& mu0,
                                       std::size_t truncation_floor = 0);

}  // namespace gfc
