#include "gfc/analysis.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc {

namespace {

std::string curve_label(const CurveParams& curve) {
    std::ostringstream out;
    out << "(k=" << curve.k << ", n=" << curve.n;
    if (!curve.lambdas.empty()) {
        out << ", lambda=";
        for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
            out << (i ? "," : "") << to_string(curve.lambdas[i]);
        }
    }
    out << ")";
    return out.str();
}

ClassAnalysis analyze_class(const CurveParams& curve, long vanishing,
                            const AnalysisOptions& options) {
    ClassAnalysis result;
    result.vanishing_coordinate = vanishing;
    result.multiplicity = degree(curve);  // k^{n-1} points per hyperplane section
    result.branch_value = branch_set(curve)[static_cast<std::size_t>(vanishing)];

    const FixedPointDescriptor representative{
        vanishing, std::vector<long>(static_cast<std::size_t>(curve.n - 1), 0)};
    const CurveParams relocated = relocate(curve, representative);
    result.relocated_lambdas = relocated.lambdas;
    result.osculation = analyze_relocated(relocated, options.truncation_floor);
    result.weierstrass = gap_sequence_relocated(relocated, options.truncation_floor);
    return result;
}

bool ramification_matches_theorem(const CurveParams& curve, const OsculationReport& report) {
    const auto& b = report.ramification;
    if (b.size() != static_cast<std::size_t>(curve.n)) return false;
    if (b[0] != 0) return false;
    if (b[1] != curve.k - 2) return false;
    for (long l = 2; l <= curve.n - 1; ++l) {
        if (b[l] != curve.k - 1) return false;
    }
    return true;
}

Rational random_nonzero_rational(std::mt19937_64& rng, long bound) {
    // Deterministic across platforms: plain modulo on the raw 64-bit draws.
    long num = 0;
    while (num == 0) {
        num = static_cast<long>(rng() % static_cast<unsigned long long>(2 * bound + 1)) - bound;
    }
    const long den = static_cast<long>(rng() % static_cast<unsigned long long>(bound)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

CurveAnalysis analyze_curve(const CurveParams& curve, const AnalysisOptions& options) {
    validate(curve);

    CurveAnalysis analysis;
    analysis.curve = curve;
    analysis.genus_value = genus(curve);
    analysis.degree_value = degree(curve);
    analysis.fixed_point_total = fixed_point_count(curve);
    analysis.canonical_deg = canonical_degree(curve);
    analysis.expected_totals = total_ramification(curve.k, curve.n);

    const long class_count = curve.n + 1;
    analysis.classes.resize(static_cast<std::size_t>(class_count));
    if (options.parallel && class_count > 1) {
        std::vector<std::future<ClassAnalysis>> futures;
        futures.reserve(static_cast<std::size_t>(class_count));
        for (long j = 0; j < class_count; ++j) {
            futures.push_back(std::async(std::launch::async, analyze_class, curve, j, options));
        }
        for (long j = 0; j < class_count; ++j) {
            analysis.classes[static_cast<std::size_t>(j)] = futures[static_cast<std::size_t>(j)].get();
        }
    } else {
        for (long j = 0; j < class_count; ++j) {
            analysis.classes[static_cast<std::size_t>(j)] = analyze_class(curve, j, options);
        }
    }

    // Per-point sums over F, classes weighted by their k^{n-1} multiplicity.
    analysis.summed_totals.assign(static_cast<std::size_t>(curve.n - 1), Integer(0));
    analysis.weight_total = 0;
    for (const ClassAnalysis& cls : analysis.classes) {
        for (long l = 1; l <= curve.n - 1; ++l) {
            analysis.summed_totals[static_cast<std::size_t>(l - 1)] +=
                cls.multiplicity * Integer(cls.osculation.ramification[static_cast<std::size_t>(l)]);
        }
        analysis.weight_total += cls.multiplicity * cls.weierstrass.weight;
    }
    analysis.plucker = plucker_table(curve, analysis.summed_totals);

    analysis.ramification_ok = true;
    for (const ClassAnalysis& cls : analysis.classes) {
        analysis.ramification_ok =
            analysis.ramification_ok && ramification_matches_theorem(curve, cls.osculation);
    }

    analysis.totals_ok = analysis.summed_totals[0] == analysis.expected_totals.b1;
    for (long l = 2; l <= curve.n - 1; ++l) {
        analysis.totals_ok = analysis.totals_ok &&
                             analysis.summed_totals[static_cast<std::size_t>(l - 1)] ==
                                 *analysis.expected_totals.rest;
    }

    analysis.plucker_ok = analysis.plucker.consistent;

    const Integer basis_count(
        static_cast<long>(monomial_basis(curve, analysis.canonical_deg).exponent_vectors.size()));
    analysis.dimension_ok = basis_count == analysis.genus_value;
    if (curve.n >= 3) {
        Integer q_total(0);
        for (long j = 0; j <= curve.k - 1; ++j) q_total += q_dimension(curve.k, curve.n, j);
        analysis.dimension_ok = analysis.dimension_ok && q_total == analysis.genus_value;
    }

    analysis.weight_ok = true;
    for (const ClassAnalysis& cls : analysis.classes) {
        if (curve.n >= 3) {
            analysis.weight_ok = analysis.weight_ok && cls.weierstrass.weight >= cls.weierstrass.bound;
        } else {
            analysis.weight_ok = analysis.weight_ok && cls.weierstrass.weight == cls.weierstrass.bound;
        }
    }
    return analysis;
}

namespace {

struct CheckAccumulator {
    CheckResult result;

    explicit CheckAccumulator(std::string name) {
        result.name = std::move(name);
        result.passed = true;
    }

    void fail(const std::string& detail) {
        if (result.passed) {
            result.passed = false;
            result.detail = detail;
        }
    }

    void note(const std::string& detail) {
        if (result.passed && result.detail.empty()) result.detail = detail;
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const std::vector<CurveParams>& curves,
                                          const VerificationOptions& options) {
    CheckAccumulator ramification("ramification-theorem");
    CheckAccumulator totals("total-ramification");
    CheckAccumulator plucker("plucker-closure");
    CheckAccumulator dimension("canonical-dimension");
    CheckAccumulator weight_bound("weight-bound");
    CheckAccumulator classic("classic-weight");
    CheckAccumulator normalization("normalization-invariance");
    CheckAccumulator rescaling("prefactor-rescaling");

    bool any_n2 = false, any_n3 = false;

    for (const CurveParams& curve : curves) {
        const std::string label = curve_label(curve);
        CurveAnalysis analysis;
        try {
            analysis = analyze_curve(curve, options.analysis);
        } catch (const Error& e) {
            ramification.fail(label + ": " + e.what());
            continue;
        }

        if (!analysis.ramification_ok) ramification.fail(label + ": b-indices off theorem values");
        if (!analysis.totals_ok) totals.fail(label + ": summed b totals differ from closed form");

        std::vector<Integer> plucker_input = analysis.summed_totals;
        if (options.corrupt_plucker_totals && !plucker_input.empty()) {
            plucker_input[0] += 1;  // test hook: deliberately wrong totals
        }
        const PluckerTable table = plucker_table(curve, plucker_input);
        if (!table.consistent) plucker.fail(label + ": recurrence does not close at d_n = 0");

        if (!analysis.dimension_ok) dimension.fail(label + ": dim mismatch against genus");

        if (curve.n >= 3) {
            any_n3 = true;
            for (const ClassAnalysis& cls : analysis.classes) {
                if (cls.weierstrass.weight < cls.weierstrass.bound) {
                    weight_bound.fail(label + ": class " + std::to_string(cls.vanishing_coordinate) +
                                      " has w < w-hat");
                }
            }
        } else {
            any_n2 = true;
            for (const ClassAnalysis& cls : analysis.classes) {
                if (cls.weierstrass.weight != cls.weierstrass.bound) {
                    classic.fail(label + ": class " + std::to_string(cls.vanishing_coordinate) +
                                 " weight differs from the known value");
                }
            }
        }

        // Normalization invariance: every admissible Moebius target pair
        // must reproduce the default reports.
        const bool full_weierstrass =
            analysis.genus_value <= options.full_invariance_genus_cap;
        for (const ClassAnalysis& cls : analysis.classes) {
            const FixedPointDescriptor representative{
                cls.vanishing_coordinate,
                std::vector<long>(static_cast<std::size_t>(curve.n - 1), 0)};
            int weierstrass_budget = full_weierstrass ? -1 : 2;
            for (std::size_t inf_slot = 0; inf_slot <= static_cast<std::size_t>(curve.n); ++inf_slot) {
                if (inf_slot == static_cast<std::size_t>(cls.vanishing_coordinate)) continue;
                for (std::size_t one_slot = 0; one_slot <= static_cast<std::size_t>(curve.n); ++one_slot) {
                    if (one_slot == inf_slot ||
                        one_slot == static_cast<std::size_t>(cls.vanishing_coordinate)) {
                        continue;
                    }
                    const CurveParams alt =
                        relocate_with_targets(curve, representative, inf_slot, one_slot);
                    if (analyze_relocated(alt, options.analysis.truncation_floor) != cls.osculation) {
                        normalization.fail(label + ": osculation differs under alternative targets");
                    }
                    if (weierstrass_budget != 0) {
                        if (gap_sequence_relocated(alt, options.analysis.truncation_floor) !=
                            cls.weierstrass) {
                            normalization.fail(label + ": gaps differ under alternative targets");
                        }
                        if (weierstrass_budget > 0) --weierstrass_budget;
                    }
                }
            }
        }

        // Prefactor rescaling: random nonzero column scalings must not move
        // any wedge order.
        {
            std::mt19937_64 rng(options.seed);
            const FixedPointDescriptor canonical{
                1, std::vector<long>(static_cast<std::size_t>(curve.n - 1), 0)};
            const CurveParams relocated = relocate(curve, canonical);
            const LocalFrame frame =
                fixed_point_frame(relocated, initial_truncation(curve.k, curve.n));
            const auto baseline = wronskian_orders(frame, curve.n);
            if (!baseline) {
                rescaling.fail(label + ": baseline orders unresolved");
            } else {
                for (int trial = 0; trial < options.rescale_trials; ++trial) {
                    LocalFrame scaled = frame;
                    for (TruncatedSeries& coordinate : scaled.coordinates) {
                        coordinate = series_scale(coordinate, random_nonzero_rational(rng, 9));
                    }
                    if (wronskian_orders(scaled, curve.n) != baseline) {
                        rescaling.fail(label + ": wedge orders moved under rescaling");
                    }
                }
            }
        }
    }

    if (!any_n3) weight_bound.note("no n >= 3 curves listed");
    if (!any_n2) classic.note("no n = 2 curves listed");

    return {ramification.result, totals.result,  plucker.result,       dimension.result,
            weight_bound.result, classic.result, normalization.result, rescaling.result};
}

SpotcheckResult spotcheck(const CurveParams& curve, long samples, unsigned long long seed,
                          const AnalysisOptions& options) {
    validate(curve);
    if (samples < 1) throw std::invalid_argument("spotcheck: samples must be >= 1");

    const BranchSet branches = branch_set(curve);
    std::mt19937_64 rng(seed);

    SpotcheckResult result;
    result.requested = samples;
    while (result.checked < samples) {
        const long num =
            static_cast<long>(rng() % 2001ULL) - 1000;  // [-1000, 1000]
        const long den = static_cast<long>(rng() % 1000ULL) + 1;  // [1, 1000]
        Rational mu0(num, den);
        mu0.canonicalize();
        const bool collides =
            std::any_of(branches.begin(), branches.end(), [&](const ExtRational& beta) {
                return !beta.infinite && beta.value == mu0;
            });
        if (collides) {
            ++result.rejected_branch_collisions;
            continue;  // silently redrawn, never counted
        }
        const OsculationReport report =
            analyze_generic_point(curve, mu0, options.truncation_floor);
        result.sampled.push_back(mu0);
        ++result.checked;
        const bool all_zero = std::all_of(report.ramification.begin(), report.ramification.end(),
                                          [](long b) { return b == 0; });
        if (!all_zero) {
            result.counterexample = SpotcheckWitness{mu0, report.ramification};
            return result;
        }
    }
    return result;
}

}  // namespace gfc
