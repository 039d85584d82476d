#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gfc/rational.hpp"
#include "gfc/series.hpp"
#include "support/generators.hpp"

using namespace gfc;

namespace {

TruncatedSeries from_list(std::vector<std::string> texts) {
    std::vector<Rational> coeffs;
    coeffs.reserve(texts.size());
    for (const auto& t : texts) coeffs.push_back(parse_rational(t));
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(generalized_binomial(3, 0) == Rational(1));
    CHECK(generalized_binomial(3, 1) == Rational(1, 3));
    CHECK(generalized_binomial(3, 2) == Rational(-1, 9));

    // Cube-root oracle: the series with these coefficients must cube to 1+t.
    const TruncatedSeries root = from_list({"1", "1/3", "-1/9"});
    const TruncatedSeries cube = series_pow(root, 3);
    CHECK(cube == from_list({"1", "1", "0"}));

    // Recurrence c_{i+1} = c_i (1/k - i)/(i+1).
    for (long k = 2; k <= 7; ++k) {
        Rational c = 1;
        for (long i = 0; i <= 30; ++i) {
            CHECK(generalized_binomial(k, i) == c);
            c *= (Rational(1, k) - Rational(i)) / Rational(i + 1);
        }
    }
}

TEST_CASE("series arithmetic basics") {
    const TruncatedSeries one_plus_z = from_list({"1", "1", "0"});
    const TruncatedSeries one_minus_z = from_list({"1", "-1", "0"});
    CHECK(series_mul(one_plus_z, one_minus_z) == from_list({"1", "0", "-1"}));

    CHECK(series_scale(one_plus_z, Rational(0)).is_zero());

    // (1 + z/3 - z^2/9)^3 = 1 + z up to three terms.
    const TruncatedSeries approx_root = from_list({"1", "1/3", "-1/9"});
    CHECK(series_pow(approx_root, 3) == from_list({"1", "1", "0"}));

    // Result truncation is the minimum of the operands'.
    const TruncatedSeries longer = from_list({"1", "2", "3", "4", "5"});
    CHECK(series_add(longer, one_plus_z).truncation() == 3);
    CHECK(series_mul(longer, one_plus_z).truncation() == 3);
}

TEST_CASE("series derivative") {
    const TruncatedSeries z_cubed = TruncatedSeries::monomial(Rational(1), 3, 5);
    const TruncatedSeries d = series_derivative(z_cubed);
    CHECK(d == from_list({"0", "0", "3", "0"}));
    CHECK(d.truncation() == 4);

    CHECK(series_derivative(TruncatedSeries::constant(Rational(5), 3)).is_zero());

    CHECK(series_derivative(from_list({"1", "1/3", "-1/9"})) == from_list({"1/3", "-2/9"}));

    CHECK_THROWS_AS(series_derivative(TruncatedSeries::one(1)), std::invalid_argument);
}

TEST_CASE("series order") {
    const TruncatedSeries s = from_list({"0", "0", "1", "0", "0", "1"});
    CHECK(series_order(s) == 2);
    CHECK_FALSE(series_order(TruncatedSeries::zero(8)).has_value());
}

TEST_CASE("k-th root of a unit series") {
    CHECK(kth_root_unit_series(TruncatedSeries::zero(4), 5) == TruncatedSeries::one(4));

    const TruncatedSeries z = TruncatedSeries::monomial(Rational(1), 1, 3);
    const TruncatedSeries sqrt = kth_root_unit_series(z, 2);
    CHECK(sqrt == from_list({"1", "1/2", "-1/8"}));
    CHECK(series_pow(sqrt, 2) == from_list({"1", "1", "0"}));

    // Substitution parity: an argument supported on 3Z yields a result
    // supported on 3Z.
    const TruncatedSeries z3 = TruncatedSeries::monomial(Rational(1), 3, 13);
    const TruncatedSeries root3 = kth_root_unit_series(z3, 4);
    for (std::size_t e = 0; e < root3.truncation(); ++e) {
        if (e % 3 != 0) CHECK(root3.coefficient(e) == 0);
    }

    CHECK_THROWS_AS(kth_root_unit_series(TruncatedSeries::one(4), 2), std::invalid_argument);
}

TEST_CASE("k-th root agrees with direct binomial composition") {
    // Independent oracle: sum_i C(1/k,i) u^i computed term by term.
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t trunc = 2 + rng() % 10;
        const long k = 2 + static_cast<long>(rng() % 6);
        const TruncatedSeries u = gfc_test::random_series_no_constant(rng, trunc);
        TruncatedSeries composed = TruncatedSeries::zero(trunc);
        TruncatedSeries u_power = TruncatedSeries::one(trunc);
        for (std::size_t i = 0; i < trunc; ++i) {
            composed = series_add(composed, series_scale(u_power, generalized_binomial(k, i)));
            u_power = series_mul(u_power, u);
        }
        CHECK(kth_root_unit_series(u, k) == composed);
    }
}

TEST_CASE("kernel property suites") {
    CHECK(gfc_test::run_root_roundtrip_suite(101, 200) == 0);
    CHECK(gfc_test::run_ring_axiom_suite(102, 200) == 0);
    CHECK(gfc_test::run_order_additivity_suite(103, 200) == 0);
}
