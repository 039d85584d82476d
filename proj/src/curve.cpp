#include "gfc/curve.hpp"

#include <stdexcept>
#include <string>

#include "gfc/errors.hpp"

namespace gfc {

namespace {

Integer integer_pow(long base, long exponent) {
    Integer result(1);
    for (long i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace

void validate(const CurveParams& curve) {
    if (curve.n < 2 || curve.k < 2 ||
        curve.lambdas.size() != static_cast<std::size_t>(curve.n - 2)) {
        throw InvalidCurveError(InvalidCurveError::Reason::LambdaCountMismatch,
                                "need k >= 2, n >= 2 and exactly n-2 lambdas");
    }
    for (const Rational& lambda : curve.lambdas) {
        if (lambda == 0 || lambda == 1) {
            throw InvalidCurveError(InvalidCurveError::Reason::ForbiddenLambdaValue,
                                    "lambda = " + to_string(lambda) + " is forbidden");
        }
    }
    for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
        for (std::size_t j = i + 1; j < curve.lambdas.size(); ++j) {
            if (curve.lambdas[i] == curve.lambdas[j]) {
                throw InvalidCurveError(InvalidCurveError::Reason::DuplicateLambda,
                                        "lambda repeated: " + to_string(curve.lambdas[i]));
            }
        }
    }
    if ((curve.n - 1) * (curve.k - 1) <= 2) {
        throw InvalidCurveError(InvalidCurveError::Reason::GenusBelowTwo,
                                "(n-1)(k-1) must exceed 2");
    }
}

bool is_valid(const CurveParams& curve) {
    try {
        validate(curve);
        return true;
    } catch (const InvalidCurveError&) {
        return false;
    }
}

Integer genus(const CurveParams& curve) {
    const Integer kpow = integer_pow(curve.k, curve.n - 1);
    const Integer numerator = kpow * ((curve.n - 1) * (curve.k - 1) - 2) + 2;
    if (numerator % 2 != 0) throw TheoremViolationError("genus formula not integral");
    return numerator / 2;
}

Integer degree(const CurveParams& curve) { return integer_pow(curve.k, curve.n - 1); }

Integer fixed_point_count(const CurveParams& curve) {
    return (curve.n + 1) * integer_pow(curve.k, curve.n - 1);
}

BranchSet branch_set(const CurveParams& curve) {
    BranchSet branches;
    branches.reserve(curve.n + 1);
    branches.push_back(ExtRational::infinity());
    branches.push_back(ExtRational::finite(Rational(0)));
    branches.push_back(ExtRational::finite(Rational(1)));
    for (const Rational& lambda : curve.lambdas) {
        branches.push_back(ExtRational::finite(lambda));
    }
    return branches;
}

std::vector<FixedPointDescriptor> fixed_points(const CurveParams& curve) {
    std::vector<FixedPointDescriptor> points;
    const long selector_len = curve.n - 1;
    for (long j = 0; j <= curve.n; ++j) {
        std::vector<long> selector(selector_len, 0);
        while (true) {
            points.push_back(FixedPointDescriptor{j, selector});
            long pos = 0;
            while (pos < selector_len) {
                if (++selector[pos] < curve.k) break;
                selector[pos] = 0;
                ++pos;
            }
            if (pos == selector_len) break;
        }
    }
    return points;
}

CurveParams relocate(const CurveParams& curve, const FixedPointDescriptor& p) {
    const std::size_t vanishing = static_cast<std::size_t>(p.vanishing_coordinate);
    std::size_t inf_slot = 0, one_slot = 0;
    bool have_inf = false;
    for (std::size_t slot = 0; slot <= static_cast<std::size_t>(curve.n); ++slot) {
        if (slot == vanishing) continue;
        if (!have_inf) {
            inf_slot = slot;
            have_inf = true;
        } else {
            one_slot = slot;
            break;
        }
    }
    return relocate_with_targets(curve, p, inf_slot, one_slot);
}

CurveParams relocate_with_targets(const CurveParams& curve, const FixedPointDescriptor& p,
                                  std::size_t inf_slot, std::size_t one_slot) {
    validate(curve);
    if (p.vanishing_coordinate < 0 || p.vanishing_coordinate > curve.n ||
        p.root_selector.size() != static_cast<std::size_t>(curve.n - 1)) {
        throw std::invalid_argument("fixed-point descriptor does not fit the curve");
    }
    const std::size_t vanishing = static_cast<std::size_t>(p.vanishing_coordinate);
    const std::size_t slot_count = static_cast<std::size_t>(curve.n) + 1;
    if (inf_slot >= slot_count || one_slot >= slot_count || inf_slot == one_slot ||
        inf_slot == vanishing || one_slot == vanishing) {
        throw std::invalid_argument("target slots must be distinct non-vanishing branches");
    }

    const BranchSet branches = branch_set(curve);
    const Mobius map =
        Mobius::to_zero_inf_one(branches[vanishing], branches[inf_slot], branches[one_slot]);

    std::vector<Rational> relocated;
    relocated.reserve(curve.n - 2);
    for (std::size_t slot = 0; slot < slot_count; ++slot) {
        if (slot == vanishing || slot == inf_slot || slot == one_slot) continue;
        const ExtRational image = map.apply(branches[slot]);
        if (image.infinite) throw TheoremViolationError("Moebius image of a branch escaped to inf");
        relocated.push_back(image.value);
    }
    CurveParams result{curve.k, curve.n, std::move(relocated)};
    validate(result);  // injectivity guarantees this; cheap cross-check
    return result;
}

}  // namespace gfc
