#include "gfc/local_geometry.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "gfc/errors.hpp"

namespace gfc {

std::size_t initial_truncation(long k, long n) {
    const std::size_t policy = static_cast<std::size_t>(4 * k * (n + 1));
    return std::max<std::size_t>(policy, 64);
}

LocalFrame fixed_point_frame(const CurveParams& relocated, std::size_t truncation) {
    validate(relocated);
    if (truncation <= static_cast<std::size_t>(relocated.k)) {
        throw std::invalid_argument("fixed_point_frame: truncation must exceed k");
    }
    LocalFrame frame;
    frame.base_kind = LocalFrame::BaseKind::FixedPoint;
    frame.coordinates.reserve(relocated.n + 1);
    frame.coordinates.push_back(TruncatedSeries::one(truncation));
    frame.coordinates.push_back(
        TruncatedSeries::monomial(Rational(1), 1, truncation));
    // lambda-hat_0 = 1, lambda-hat_j = relocated.lambdas[j-1] for j >= 1.
    for (long j = 1; j <= relocated.n - 1; ++j) {
        const Rational lambda_hat = (j == 1) ? Rational(1) : relocated.lambdas[j - 2];
        const TruncatedSeries argument = TruncatedSeries::monomial(
            Rational(1) / lambda_hat, static_cast<std::size_t>(relocated.k), truncation);
        frame.coordinates.push_back(kth_root_unit_series(argument, relocated.k));
    }
    return frame;
}

LocalFrame generic_point_frame(const CurveParams& curve, const Rational& mu0,
                               std::size_t truncation) {
    validate(curve);
    if (truncation < 2) {
        throw std::invalid_argument("generic_point_frame: truncation must be >= 2");
    }
    const BranchSet branches = branch_set(curve);
    for (const ExtRational& beta : branches) {
        if (!beta.infinite && beta.value == mu0) {
            throw BranchCollisionError("mu0 = " + to_string(mu0) + " is a branch value");
        }
    }
    LocalFrame frame;
    frame.base_kind = LocalFrame::BaseKind::Generic;
    frame.mu0 = mu0;
    frame.coordinates.reserve(curve.n + 1);
    frame.coordinates.push_back(TruncatedSeries::one(truncation));
    for (long j = 1; j <= curve.n; ++j) {
        const Rational& beta = branches[j].value;  // branches 1..n are finite
        const TruncatedSeries argument =
            TruncatedSeries::monomial(Rational(1) / (mu0 - beta), 1, truncation);
        frame.coordinates.push_back(kth_root_unit_series(argument, curve.k));
    }
    return frame;
}

std::optional<std::vector<long>> wronskian_orders(const LocalFrame& frame, long max_l) {
    const std::size_t cols = frame.coordinates.size();
    if (max_l < 0 || static_cast<std::size_t>(max_l) >= cols) {
        throw std::invalid_argument("wronskian_orders: need 0 <= max_l <= n");
    }
    std::size_t min_trunc = frame.coordinates.front().truncation();
    for (const TruncatedSeries& c : frame.coordinates) {
        min_trunc = std::min(min_trunc, c.truncation());
    }
    if (min_trunc <= static_cast<std::size_t>(max_l)) {
        return std::nullopt;  // cannot even form the derivative rows
    }

    // rows[r][j] = j-th coordinate differentiated r times.
    std::vector<std::vector<TruncatedSeries>> rows;
    rows.push_back(frame.coordinates);
    for (long r = 1; r <= max_l; ++r) {
        std::vector<TruncatedSeries> row;
        row.reserve(cols);
        for (const TruncatedSeries& entry : rows.back()) {
            row.push_back(series_derivative(entry));
        }
        rows.push_back(std::move(row));
    }

    // minors[mask] = det of rows 0..(popcount-1) on the columns of mask.
    std::vector<std::optional<TruncatedSeries>> minors(std::size_t{1} << cols);
    for (std::size_t j = 0; j < cols; ++j) {
        minors[std::size_t{1} << j] = rows[0][j];
    }

    std::vector<long> result;
    for (long l = 0; l <= max_l; ++l) {
        std::optional<long> level_order;
        for (std::size_t mask = 1; mask < minors.size(); ++mask) {
            if (std::popcount(mask) != l + 1 || !minors[mask]) continue;
            if (const auto ord = series_order(*minors[mask])) {
                if (!level_order || *ord < *level_order) level_order = *ord;
            }
        }
        if (!level_order) return std::nullopt;  // every minor unresolved here
        result.push_back(*level_order);
        if (l == max_l) break;

        std::vector<std::optional<TruncatedSeries>> next(minors.size());
        const std::vector<TruncatedSeries>& bottom = rows[l + 1];
        for (std::size_t mask = 1; mask < next.size(); ++mask) {
            if (std::popcount(mask) != l + 2) continue;
            TruncatedSeries det = TruncatedSeries::zero(min_trunc);
            int position = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!(mask & (std::size_t{1} << j))) continue;
                TruncatedSeries term = series_mul(bottom[j], *minors[mask ^ (std::size_t{1} << j)]);
                if (((l + 1) + position) % 2 != 0) term = series_neg(term);
                det = series_add(det, term);
                ++position;
            }
            next[mask] = std::move(det);
        }
        minors = std::move(next);
    }
    return result;
}

OsculationReport ramification_from_orders(const std::vector<long>& orders) {
    if (orders.size() < 2) {
        throw std::invalid_argument("ramification_from_orders: need ord_0..ord_n");
    }
    OsculationReport report;
    report.wedge_orders = orders;
    for (std::size_t l = 0; l + 1 < orders.size(); ++l) {
        const long prev = (l == 0) ? 0 : orders[l - 1];
        const long b = orders[l + 1] - 2 * orders[l] + prev;
        if (b < 0) {
            std::ostringstream msg;
            msg << "negative second difference at l = " << l << " (ord " << orders[l + 1]
                << ", " << orders[l] << ", " << prev << ")";
            throw NegativeIndexError(msg.str());
        }
        report.ramification.push_back(b);
        report.alpha.push_back(b);
    }
    long tail = 0;
    for (std::size_t l = 1; l < report.ramification.size(); ++l) tail += report.ramification[l];
    report.hyperosculating = tail >= 1;
    return report;
}

namespace {

OsculationReport analyze_frame_adaptive(const CurveParams& curve, std::size_t start,
                                        const std::function<LocalFrame(std::size_t)>& build) {
    for (std::size_t trunc = start; trunc <= kTruncationCap; trunc *= 2) {
        const LocalFrame frame = build(trunc);
        if (const auto orders = wronskian_orders(frame, curve.n)) {
            return ramification_from_orders(*orders);
        }
    }
    std::ostringstream msg;
    msg << "wedge orders unresolved at truncation cap " << kTruncationCap << " for (k, n) = ("
        << curve.k << ", " << curve.n << ")";
    throw PrecisionCapExceededError(msg.str());
}

void check_fixed_point_indices(const CurveParams& curve, const OsculationReport& report) {
    const auto& b = report.ramification;
    bool ok = b.size() == static_cast<std::size_t>(curve.n) && b[0] == 0;
    if (ok && curve.n >= 2) ok = b[1] == curve.k - 2;
    for (long l = 2; ok && l <= curve.n - 1; ++l) ok = b[l] == curve.k - 1;
    if (!ok) {
        std::ostringstream msg;
        msg << "fixed-point ramification (";
        for (std::size_t i = 0; i < b.size(); ++i) msg << (i ? "," : "") << b[i];
        msg << ") does not match (0, k-2, k-1, ...) for k = " << curve.k;
        throw TheoremViolationError(msg.str());
    }
}

}  // namespace

OsculationReport analyze_relocated(const CurveParams& relocated, std::size_t truncation_floor) {
    const std::size_t start =
        std::max(initial_truncation(relocated.k, relocated.n), truncation_floor);
    OsculationReport report = analyze_frame_adaptive(
        relocated, start, [&](std::size_t t) { return fixed_point_frame(relocated, t); });
    check_fixed_point_indices(relocated, report);
    return report;
}

OsculationReport analyze_point(const CurveParams& curve, const FixedPointDescriptor& p,
                               std::size_t truncation_floor) {
    return analyze_relocated(relocate(curve, p), truncation_floor);
}

OsculationReport analyze_generic_point(const CurveParams& curve, const Rational& mu0,
                                       std::size_t truncation_floor) {
    const std::size_t start = std::max(initial_truncation(curve.k, curve.n), truncation_floor);
    return analyze_frame_adaptive(
        curve, start, [&](std::size_t t) { return generic_point_frame(curve, mu0, t); });
}

}  // namespace gfc
