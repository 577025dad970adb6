#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umemura/lambda_series.hpp"

using namespace umemura;

namespace {

const BiPoly t = BiPoly::var_t();

}  // namespace

TEST_CASE("truncated_F returns the entry sequence as series coefficients") {
    const LambdaSeries f0 = truncated_F(0);
    REQUIRE(f0.coeffs.size() == 1);
    CHECK(f0.coeffs[0] == BiPoly::constant(Rational(1)));

    const LambdaSeries f1 = truncated_F(1);
    REQUIRE(f1.coeffs.size() == 2);
    CHECK(f1.coeffs[1] == t.scaled(Rational(3, 4)));

    const LambdaSeries f2 = truncated_F(2);
    REQUIRE(f2.coeffs.size() == 3);
    const BiPoly a2 = BiPoly::from_terms(
        {{Rational(11, 16), 0, 2}, {Rational(3, 4), 0, 1}, {Rational(-1), 1, 1}});
    CHECK(f2.coeffs[2] == a2);
}

TEST_CASE("determined residual orders run from lambda^2 down to lambda^{2-N}") {
    const auto orders = riccati_formal_residual(6);
    REQUIRE(orders.size() == 7);
    CHECK(orders.front().first == 2);
    CHECK(orders.back().first == -4);
}

TEST_CASE("every determined order vanishes identically (N = 8, symbolic r)") {
    for (const auto& [k, poly] : riccati_formal_residual(8)) {
        INFO("order lambda^", k);
        CHECK(poly.is_zero());
    }
}

TEST_CASE("numeric r gives the same all-zero verdict") {
    for (const auto& [k, poly] : riccati_formal_residual(8, Rational(-2, 5)))
        CHECK(poly.is_zero());
}

TEST_CASE("hand-expanded top orders") {
    // order lambda^2 collects 1 - a_0, order lambda^1 collects (3/4) t a_0 - a_1
    LambdaSeries f = truncated_F(4);
    auto orders = riccati_formal_residual(f);
    CHECK(orders[0].first == 2);
    CHECK(orders[0].second == BiPoly::constant(Rational(1)) - f.coeffs[0]);
    CHECK(orders[1].first == 1);
    CHECK(orders[1].second == t.scaled(Rational(3, 4)) * f.coeffs[0] - f.coeffs[1]);
}

TEST_CASE("corrupting a_1 to t leaves residual -(1/4)t at order lambda^1") {
    LambdaSeries f = truncated_F(4);
    f.coeffs[1] = t;
    const auto orders = riccati_formal_residual(f);
    REQUIRE(orders[1].first == 1);
    CHECK_FALSE(orders[1].second.is_zero());
    CHECK(orders[1].second == t.scaled(Rational(-1, 4)));
}

TEST_CASE("truncation order below 2 is rejected") {
    CHECK_THROWS_AS(riccati_formal_residual(1), std::invalid_argument);
}
