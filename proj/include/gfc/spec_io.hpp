#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/analysis.hpp"
#include "gfc/curve.hpp"

namespace gfc {

/// Run options carried by a curve spec file. Command-line flags override
/// them; absent fields fall back to built-in defaults.
struct RunOptions {
    std::optional<long> truncation;
    std::optional<long> samples;
    std::optional<unsigned long long> seed;
};

struct SpecFile {
    std::vector<CurveParams> curves;
    RunOptions options;
};

/// Parses a curve spec file:
///   {"curves": [{"k": 3, "n": 3, "lambdas": ["2"]}, ...],
///    "options": {"truncation": 128, "samples": 10, "seed": 7}}
/// Rationals are "p/q" (or "p") strings. Every curve is validated before
/// returning; a file with any invalid record is rejected atomically.
/// Throws std::invalid_argument on schema problems and InvalidCurveError
/// on constraint violations.
SpecFile parse_spec_file(const std::string& text);

SpecFile load_spec_file(const std::string& path);

/// Deterministic JSON rendering of curve analyses: exact integers as JSON
/// numbers, rationals as "p/q" strings, fixed key order. Byte-identical
/// across runs for identical inputs, and stable under parse + re-dump.
std::string analyses_to_json(const std::vector<CurveAnalysis>& analyses);

/// Flat CSV rendering, one row per fixed-point class.
std::string analyses_to_csv(const std::vector<CurveAnalysis>& analyses);

}  // namespace gfc
