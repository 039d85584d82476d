// Acceptance driver: runs every contract criterion at its stated tolerance
// (all comparisons are exact integers) and prints one PASS/FAIL line per
// criterion. Returns the number of failed criteria.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gfc/analysis.hpp"
#include "gfc/curve.hpp"
#include "gfc/errors.hpp"
#include "gfc/local_geometry.hpp"
#include "gfc/weierstrass.hpp"
#include "support/generators.hpp"

using namespace gfc;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool passed = false;
    try {
        passed = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!passed) ++g_failures;
}

CurveParams make_curve(long k, long n, std::vector<long> lambdas = {}) {
    CurveParams curve{k, n, {}};
    for (long v : lambdas) curve.lambdas.emplace_back(v);
    return curve;
}

std::string label(const CurveParams& curve) {
    std::ostringstream out;
    out << "(" << curve.k << "," << curve.n;
    for (const Rational& lambda : curve.lambdas) out << "," << to_string(lambda);
    out << ")";
    return out.str();
}

}  // namespace

int main() {
    const std::vector<CurveParams> corpus = {
        make_curve(4, 2),
        make_curve(5, 2),
        make_curve(6, 2),
        make_curve(3, 3, {2}),
        make_curve(3, 3, {-1}),
        make_curve(2, 4, {2, 3}),
        make_curve(3, 4, {2, 3}),
        make_curve(2, 5, {2, 3, 4}),
    };

    std::cout << "analyzing " << corpus.size() << " corpus curves..." << std::endl;
    std::vector<CurveAnalysis> analyses;
    analyses.reserve(corpus.size());
    for (const CurveParams& curve : corpus) {
        analyses.push_back(analyze_curve(curve));
        std::cout << "  " << label(curve) << " done" << std::endl;
    }

    criterion(1, "fixed-point ramification indices b_1 = k-2, b_l = k-1", [&](std::string& detail) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            for (const ClassAnalysis& cls : analyses[i].classes) {
                const auto& b = cls.osculation.ramification;
                bool ok = b.size() == static_cast<std::size_t>(corpus[i].n) && b[0] == 0 &&
                          b[1] == corpus[i].k - 2;
                for (long l = 2; ok && l <= corpus[i].n - 1; ++l) ok = b[l] == corpus[i].k - 1;
                if (!ok || !cls.osculation.hyperosculating ||
                    (corpus[i].k == 2 && corpus[i].n == 2)) {
                    detail = label(corpus[i]) + " class " + std::to_string(cls.vanishing_coordinate);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(2, "10 seeded generic points per curve have all b_l = 0", [&](std::string& detail) {
        for (const CurveParams& curve : corpus) {
            const SpotcheckResult result = spotcheck(curve, 10, 20250discussion);
            if (result.checked != 10 || result.counterexample) {
                detail = label(curve);
                return false;
            }
        }
        return true;
    });

    criterion(3, "Pluecker recurrence closes on per-point-summed totals", [&](std::string& detail) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (!analyses[i].plucker.consistent) {
                detail = label(corpus[i]);
                return false;
            }
        }
        const PluckerTable& quartic = analyses[0].plucker;
        if (quartic.ranks != std::vector<Integer>{0, 4, 12, 0}) {
            detail = "(4,2) table mismatch";
            return false;
        }
        return true;
    });

    criterion(4, "classic weights 2, 9, 25 and total 24 for the quartic", [&](std::string& detail) {
        const std::vector<std::pair<std::size_t, long>> classic = {{0, 2}, {1, 9}, {2, 25}};
        for (const auto& [index, expected] : classic) {
            for (const ClassAnalysis& cls : analyses[index].classes) {
                if (cls.weierstrass.weight != expected) {
                    detail = label(corpus[index]);
                    return false;
                }
            }
        }
        if (analyses[0].weight_total != 24) {
            detail = "quartic total weight != g(g^2-1)";
            return false;
        }
        return true;
    });

    criterion(5, "paper gap sequences for (2,4) and (3,3)", [&](std::string& detail) {
        for (const ClassAnalysis& cls : analyses[5].classes) {  // (2,4,{2,3})
            if (cls.weierstrass.gaps != std::vector<long>{1, 2, 3, 5, 7} ||
                cls.weierstrass.weight < 3) {
                detail = "(2,4) class " + std::to_string(cls.vanishing_coordinate);
                return false;
            }
        }
        for (const std::size_t index : {std::size_t{3}, std::size_t{4}}) {  // both (3,3) curves
            for (const ClassAnalysis& cls : analyses[index].classes) {
                const auto& a = cls.weierstrass.gaps;
                bool ok = a.size() == 10;
                for (long i = 1; ok && i <= 5; ++i) ok = a[i - 1] == i;
                ok = ok && a[5] == 7 && a[6] == 8 && a[7] == 10 && a[8] == 13 && a[9] >= 16 &&
                     cls.weierstrass.weight >= 14;
                if (!ok) {
                    detail = label(corpus[index]) + " class " +
                             std::to_string(cls.vanishing_coordinate);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(6, "weights meet the n >= 3 lower bound", [&](std::string& detail) {
        if (weight_lower_bound(3, 3) != 14 || weight_lower_bound(2, 4) != 3) {
            detail = "closed-form anchor values";
            return false;
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (corpus[i].n < 3) continue;
            const Integer bound = weight_lower_bound(corpus[i].k, corpus[i].n);
            for (const ClassAnalysis& cls : analyses[i].classes) {
                if (cls.weierstrass.bound != bound || cls.weierstrass.weight < bound) {
                    detail = label(corpus[i]);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(7, "canonical dimension accounting", [&](std::string& detail) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const long r = canonical_degree(corpus[i]);
            const Integer count(
                static_cast<long>(monomial_basis(corpus[i], r).exponent_vectors.size()));
            if (count != analyses[i].genus_value) {
                detail = label(corpus[i]) + " dim != g";
                return false;
            }
            if (corpus[i].n >= 3) {
                Integer total(0);
                for (long j = 0; j <= corpus[i].k - 1; ++j) {
                    total += q_dimension(corpus[i].k, corpus[i].n, j);
                }
                if (total != analyses[i].genus_value) {
                    detail = label(corpus[i]) + " Q-split sum != g";
                    return false;
                }
            }
        }
        if (q_dimension(3, 3, 0) != 6 || q_dimension(3, 3, 1) != 3 || q_dimension(3, 3, 2) != 1) {
            detail = "(3,3) split values";
            return false;
        }
        // Brute-force monomial counts for the (3,3) split: degree 2-j in
        // x_0, x_2, x_3 with the x_3 exponent below 3.
        for (long j = 0; j <= 2; ++j) {
            long count = 0;
            const long m = 2 - j;
            for (long a0 = 0; a0 <= m; ++a0) {
                for (long a2 = 0; a0 + a2 <= m; ++a2) {
                    const long a3 = m - a0 - a2;
                    if (a3 < 3) ++count;
                }
            }
            if (Integer(count) != q_dimension(3, 3, j)) {
                detail = "(3,3) brute-force split";
                return false;
            }
        }
        return true;
    });

    criterion(8, "rescaling and Moebius-normalization invariance", [&](std::string& detail) {
        // (a) 100 random nonzero rescalings leave every wedge order fixed.
        std::mt19937_64 rng(4242);
        const std::vector<CurveParams> frames = {make_curve(3, 3, {2}), make_curve(2, 4, {2, 3})};
        for (const CurveParams& curve : frames) {
            const LocalFrame frame =
                fixed_point_frame(curve, initial_truncation(curve.k, curve.n));
            const auto baseline = wronskian_orders(frame, curve.n);
            if (!baseline) {
                detail = "baseline unresolved";
                return false;
            }
            for (int trial = 0; trial < 100; ++trial) {
                LocalFrame scaled = frame;
                for (auto& coordinate : scaled.coordinates) {
                    coordinate =
                        series_scale(coordinate, gfc_test::random_nonzero_rational(rng, 9));
                }
                if (wronskian_orders(scaled, curve.n) != baseline) {
                    detail = label(curve) + " rescaling moved an order";
                    return false;
                }
            }
        }
        // (b) every admissible Moebius target choice reproduces both reports.
        for (const CurveParams& curve : frames) {
            for (long j = 0; j <= curve.n; ++j) {
                const FixedPointDescriptor p{j, std::vector<long>(curve.n - 1, 0)};
                const OsculationReport osc = analyze_point(curve, p);
                const WeierstrassReport gaps = gap_sequence(curve, p);
                for (std::size_t inf_slot = 0; inf_slot <= static_cast<std::size_t>(curve.n);
                     ++inf_slot) {
                    for (std::size_t one_slot = 0; one_slot <= static_cast<std::size_t>(curve.n);
                         ++one_slot) {
                        if (inf_slot == one_slot || inf_slot == static_cast<std::size_t>(j) ||
                            one_slot == static_cast<std::size_t>(j)) {
                            continue;
                        }
                        const CurveParams alt = relocate_with_targets(curve, p, inf_slot, one_slot);
                        if (analyze_relocated(alt) != osc || gap_sequence_relocated(alt) != gaps) {
                            detail = label(curve) + " class " + std::to_string(j);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    criterion(9, "kernel property suites on 1000 randomized instances", [&](std::string& detail) {
        const int roundtrip = gfc_test::run_root_roundtrip_suite(90001, 1000);
        const int ring = gfc_test::run_ring_axiom_suite(90002, 1000);
        const int order = gfc_test::run_order_additivity_suite(90003, 1000);
        if (roundtrip + ring + order != 0) {
            std::ostringstream out;
            out << roundtrip << "/" << ring << "/" << order << " failures";
            detail = out.str();
            return false;
        }
        return true;
    });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
    } else {
        std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    }
    return g_failures;
}
