#pragma once

#include <cstddef>
#include <vector>

#include "gfc/rational.hpp"

namespace gfc {

/// One generalized Fermat curve of type (k, n): the smooth complete
/// intersection
///
///     x_0^k + x_1^k + x_2^k = 0
///     lambda_j x_0^k + x_1^k + x_{j+2}^k = 0      (1 <= j <= n-2)
///
/// in P^n, carrying the coordinatewise k-th-root-of-unity automorphism
/// group. lambdas is empty exactly when n = 2 (the classic Fermat curve).
struct CurveParams {
    long k = 0;
    long n = 0;
    std::vector<Rational> lambdas;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Symbolic label of a point fixed by one generator: which coordinate
/// vanishes and, for each of the n-1 non-normalized coordinates, which
/// k-th root branch it takes. The selector residues are combinatorial
/// labels only; no root of unity is ever materialized, and no computed
/// order depends on them.
struct FixedPointDescriptor {
    long vanishing_coordinate = 0;   // index j in 0..n
    std::vector<long> root_selector; // n-1 residues mod k

    friend bool operator==(const FixedPointDescriptor&, const FixedPointDescriptor&) = default;
};

/// The n+1 branch values of the degree-k^n quotient map to the line, in
/// coordinate order: position j is the image of the locus x_j = 0, so the
/// list reads [inf, 0, 1, lambda_1, ..., lambda_{n-2}].
using BranchSet = std::vector<ExtRational>;

/// Throws InvalidCurveError naming the violated constraint. A valid curve
/// has every lambda outside {0,1}, pairwise distinct lambdas, exactly n-2
/// of them, and (n-1)(k-1) > 2 (genus at least two).
void validate(const CurveParams& curve);

bool is_valid(const CurveParams& curve);

/// g = (k^{n-1} ((n-1)(k-1) - 2) + 2) / 2, always an integer for valid input.
Integer genus(const CurveParams& curve);

/// Degree of the standard embedding: k^{n-1}.
Integer degree(const CurveParams& curve);

/// |F| = (n+1) k^{n-1}, the number of points fixed by some group generator.
Integer fixed_point_count(const CurveParams& curve);

BranchSet branch_set(const CurveParams& curve);

/// All (n+1) k^{n-1} fixed-point descriptors, vanishing coordinate outermost,
/// selectors counted little-endian. Intended for desk-scale curves.
std::vector<FixedPointDescriptor> fixed_points(const CurveParams& curve);

/// Moves the fixed point p over branch value 0: applies the unique Moebius
/// map sending (mu_p, mu_a, mu_b) to (0, inf, 1), where mu_p is the branch
/// value of p's vanishing coordinate and (mu_a, mu_b) are the first two
/// remaining branch values in canonical order. Returns the curve whose
/// branch set is the image, i.e. the transformed lambda-hat vector. Output
/// is always valid (Moebius maps are injective).
CurveParams relocate(const CurveParams& curve, const FixedPointDescriptor& p);

/// Same, but with an explicit choice of which remaining branch slots map
/// to inf and 1. Slots index the canonical branch list of the *original*
/// curve; both must differ from p's slot and from each other. Every
/// admissible choice yields the same osculation and gap data downstream.
CurveParams relocate_with_targets(const CurveParams& curve, const FixedPointDescriptor& p,
                                  std::size_t inf_slot, std::size_t one_slot);

}  // namespace gfc
