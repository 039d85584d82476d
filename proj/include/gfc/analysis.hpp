#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/curve.hpp"
#include "gfc/local_geometry.hpp"
#include "gfc/weierstrass.hpp"

namespace gfc {

struct AnalysisOptions {
    std::size_t truncation_floor = 0;  // 0: policy default
    bool parallel = true;              // per-class work is independent
};

/// Results for one orbit of fixed points under the curve's group: all
/// points sharing a vanishing coordinate produce identical reports, so one
/// representative is analyzed and the class multiplicity recorded.
struct ClassAnalysis {
    long vanishing_coordinate = 0;
    Integer multiplicity;  // k^{n-1}
    ExtRational branch_value;
    std::vector<Rational> relocated_lambdas;
    OsculationReport osculation;
    WeierstrassReport weierstrass;
};

struct CurveAnalysis {
    CurveParams curve;
    Integer genus_value;
    Integer degree_value;
    Integer fixed_point_total;
    long canonical_deg = 0;
    TotalRamification expected_totals;
    std::vector<ClassAnalysis> classes;  // by vanishing coordinate, 0..n
    std::vector<Integer> summed_totals;  // per-point sums of b_1..b_{n-1}
    PluckerTable plucker;                // from summed_totals
    Integer weight_total;                // sum of w(p) over F

    bool ramification_ok = false;  // b = (0, k-2, k-1, ...) in every class
    bool totals_ok = false;        // summed totals match the closed form
    bool plucker_ok = false;       // recurrence closes with d_n = 0
    bool dimension_ok = false;     // dim of degree-r space = genus (+ Q-split for n >= 3)
    bool weight_ok = false;        // w >= bound (n >= 3) / w == classic (n = 2)

    bool all_ok() const {
        return ramification_ok && totals_ok && plucker_ok && dimension_ok && weight_ok;
    }
};

/// Full per-curve pipeline: per-class osculation and gap reports, summed
/// ramification totals, the Pluecker table they induce, and the verdict
/// flags. Throws on invalid curves, precision-cap exhaustion, or theorem
/// violations inside analyze_point.
CurveAnalysis analyze_curve(const CurveParams& curve, const AnalysisOptions& options = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationOptions {
    AnalysisOptions analysis;
    unsigned long long seed = 1234;   // rescaling-trial generator
    int rescale_trials = 20;
    /// Weierstrass-side normalization invariance is checked on every
    /// admissible Moebius target pair up to this genus, and on a fixed
    /// deterministic sample of pairs above it (the osculation side is
    /// always exhaustive).
    long full_invariance_genus_cap = 24;
    /// Test hook: corrupt the summed b-totals before the Pluecker check.
    bool corrupt_plucker_totals = false;
};

/// The cross-module invariant suite behind `verify`: ramification theorem,
/// total-ramification sums, Pluecker closure, canonical-space dimension,
/// weight bounds, classic-weight agreement, normalization invariance, and
/// prefactor-rescaling invariance, for every listed curve.
std::vector<CheckResult> run_verification(const std::vector<CurveParams>& curves,
                                          const VerificationOptions& options = {});

struct SpotcheckWitness {
    Rational mu0;
    std::vector<long> ramification;
};

struct SpotcheckResult {
    long requested = 0;
    long checked = 0;
    long rejected_branch_collisions = 0;
    std::vector<Rational> sampled;                 // accepted mu0 values, in order
    std::optional<SpotcheckWitness> counterexample;  // set if some b_l != 0
};

/// Draws `samples` random rational base points (numerator and denominator
/// bounded by 1000; branch values silently redrawn and never counted) and
/// checks that every wedge ramification index vanishes there.
SpotcheckResult spotcheck(const CurveParams& curve, long samples, unsigned long long seed,
                          const AnalysisOptions& options = {});

}  // namespace gfc
