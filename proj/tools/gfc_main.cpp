// gfc: exact invariants of generalized Fermat curves over the rationals.
//
// Subcommands:
//   analyze   full per-curve reports (osculation, gaps, weights, Pluecker)
//   verify    cross-module invariant suite over the listed curves
//   spotcheck random generic points, all wedge ramification must vanish
//
// Exit codes: 0 success, 1 usage, 2 invalid curve, 3 precision cap,
// 4 theorem or consistency violation.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfc/analysis.hpp"
#include "gfc/errors.hpp"
#include "gfc/spec_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidCurve = 2;
constexpr int kExitPrecisionCap = 3;
constexpr int kExitViolation = 4;

std::vector<gfc::Rational> parse_lambda_list(const std::string& text) {
    std::vector<gfc::Rational> lambdas;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) lambdas.push_back(gfc::parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return lambdas;
}

int run_analyze(const std::string& path, const std::string& format, long truncation) {
    const gfc::SpecFile spec = gfc::load_spec_file(path);
    gfc::AnalysisOptions options;
    if (truncation > 0) {
        options.truncation_floor = static_cast<std::size_t>(truncation);
    } else if (spec.options.truncation && *spec.options.truncation > 0) {
        options.truncation_floor = static_cast<std::size_t>(*spec.options.truncation);
    }

    std::vector<gfc::CurveAnalysis> analyses;
    analyses.reserve(spec.curves.size());
    bool all_ok = true;
    for (const gfc::CurveParams& curve : spec.curves) {
        analyses.push_back(gfc::analyze_curve(curve, options));
        all_ok = all_ok && analyses.back().all_ok();
    }

    if (format == "csv") {
        std::cout << gfc::analyses_to_csv(analyses);
    } else {
        std::cout << gfc::analyses_to_json(analyses);
    }
    if (!all_ok) {
        std::cerr << "error: at least one verdict failed; see the report\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_verify(const std::string& path, long truncation, bool corrupt_totals) {
    const gfc::SpecFile spec = gfc::load_spec_file(path);
    gfc::VerificationOptions options;
    if (truncation > 0) {
        options.analysis.truncation_floor = static_cast<std::size_t>(truncation);
    } else if (spec.options.truncation && *spec.options.truncation > 0) {
        options.analysis.truncation_floor = static_cast<std::size_t>(*spec.options.truncation);
    }
    if (spec.options.seed) options.seed = *spec.options.seed;
    options.corrupt_plucker_totals = corrupt_totals;

    const std::vector<gfc::CheckResult> checks = gfc::run_verification(spec.curves, options);
    std::string first_failure;
    for (const gfc::CheckResult& check : checks) {
        std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) std::cout << " - " << check.detail;
        std::cout << "\n";
        if (!check.passed && first_failure.empty()) first_failure = check.name;
    }
    if (!first_failure.empty()) {
        std::cerr << "error: first failing check: " << first_failure << "\n";
        return kExitViolation;
    }
    std::cout << "all checks passed (" << spec.curves.size() << " curves)\n";
    return kExitOk;
}

int run_spotcheck(long k, long n, const std::string& lambdas_text, long samples,
                  unsigned long long seed, long truncation) {
    gfc::CurveParams curve{k, n, parse_lambda_list(lambdas_text)};
    gfc::validate(curve);

    gfc::AnalysisOptions options;
    if (truncation > 0) options.truncation_floor = static_cast<std::size_t>(truncation);

    const gfc::SpotcheckResult result = gfc::spotcheck(curve, samples, seed, options);
    if (result.counterexample) {
        std::cerr << "error: hyperosculation at generic point mu0 = "
                  << gfc::to_string(result.counterexample->mu0) << ", b = (";
        for (std::size_t i = 0; i < result.counterexample->ramification.size(); ++i) {
            std::cerr << (i ? "," : "") << result.counterexample->ramification[i];
        }
        std::cerr << ")\n";
        return kExitViolation;
    }
    std::cout << "spotcheck: " << result.checked << "/" << result.requested
              << " generic points with all b_l = 0 (seed " << seed << ", "
              << result.rejected_branch_collisions << " branch collisions redrawn)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact osculation and Weierstrass data of generalized Fermat curves"};
    app.require_subcommand(1);

    std::string analyze_path, analyze_format = "json";
    long analyze_truncation = 0;
    CLI::App* analyze = app.add_subcommand("analyze", "write per-curve reports");
    analyze->add_option("spec-file", analyze_path, "curve spec file (JSON)")->required();
    analyze->add_option("--format", analyze_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--truncation", analyze_truncation, "initial series truncation floor");

    std::string verify_path;
    long verify_truncation = 0;
    bool corrupt_totals = false;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant checks");
    verify->add_option("spec-file", verify_path, "curve spec file (JSON)")->required();
    verify->add_option("--truncation", verify_truncation, "initial series truncation floor");
    verify->add_flag("--corrupt-plucker-totals", corrupt_totals)->group("");  // test hook

    long sc_k = 0, sc_n = 0, sc_samples = 10, sc_truncation = 0;
    unsigned long long sc_seed = 1;
    std::string sc_lambdas;
    CLI::App* spot = app.add_subcommand("spotcheck", "sample random generic points");
    spot->add_option("--k", sc_k, "exponent k >= 2")->required();
    spot->add_option("--n", sc_n, "type parameter n >= 2")->required();
    spot->add_option("--lambdas", sc_lambdas, "comma-separated rationals, e.g. 2,3 or 1/2,-3");
    spot->add_option("--samples", sc_samples, "number of generic points (>= 1)");
    spot->add_option("--seed", sc_seed, "random seed");
    spot->add_option("--truncation", sc_truncation, "initial series truncation floor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_path, analyze_format, analyze_truncation);
        if (*verify) return run_verify(verify_path, verify_truncation, corrupt_totals);
        if (*spot) {
            if (sc_samples < 1) {
                std::cerr << "error: --samples must be >= 1\n";
                return kExitUsage;
            }
            return run_spotcheck(sc_k, sc_n, sc_lambdas, sc_samples, sc_seed, sc_truncation);
        }
    } catch (const gfc::InvalidCurveError& e) {
        std::cerr << "error: invalid curve ("
                  << gfc::InvalidCurveError::reason_name(e.reason()) << "): " << e.what() << "\n";
        return kExitInvalidCurve;
    } catch (const gfc::PrecisionCapExceededError& e) {
        std::cerr << "error: precision cap exceeded: " << e.what() << "\n";
        return kExitPrecisionCap;
    } catch (const gfc::TheoremViolationError& e) {
        std::cerr << "error: theorem violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
