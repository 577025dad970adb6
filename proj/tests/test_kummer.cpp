#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "umemura/errors.hpp"
#include "umemura/kummer.hpp"

using namespace umemura;

namespace {

// Relative residual of w in Kummer's equation x w'' + (b - x) w' - a w = 0.
double kummer_ode_residual(const Jet2& w, double a, double b, double x) {
    const double lhs = x * w.d2 + (b - x) * w.d1 - a * w.f;
    const double scale =
        std::abs(x * w.d2) + std::abs((b - x) * w.d1) + std::abs(a * w.f) + 1e-300;
    return std::abs(lhs) / scale;
}

}  // namespace

TEST_CASE("closed-form checks") {
    CHECK(kummer_m(0.3, 1.7, 0.0) == 1.0);                       // empty sum
    CHECK(kummer_m(-1.0, 2.5, 0.8) == doctest::Approx(1.0 - 0.8 / 2.5).epsilon(1e-15));
    CHECK(kummer_m(1.0, 1.0, 1.25) == doctest::Approx(std::exp(1.25)).epsilon(1e-15));
    CHECK(kummer_m(KummerParams{1.0, 1.0, -0.5}) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
}

TEST_CASE("terminating series for nonpositive integer a is an exact polynomial") {
    // M(-2, b, x) = 1 - 2x/b + x^2/(b(b+1))
    const double b = 1.3, x = 2.0;
    const double want = 1.0 - 2.0 * x / b + x * x / (b * (b + 1.0));
    CHECK(kummer_m(-2.0, b, x) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("InvalidB for b zero or a negative integer") {
    CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), InvalidB);
    CHECK_THROWS_AS(kummer_m(1.0, -3.0, 1.0), InvalidB);
    CHECK_NOTHROW(kummer_m(1.0, -2.5, 1.0));
}

TEST_CASE("M satisfies its defining ODE on random parameters") {
    std::mt19937 gen(777);
    std::uniform_real_distribution<double> a_dist(-3.0, 3.0);
    std::uniform_real_distribution<double> b_dist(0.3, 4.0);
    for (int draw = 0; draw < 20; ++draw) {
        const double a = a_dist(gen), b = b_dist(gen);
        for (double x = 0.1; x <= 5.0; x += 0.35) {
            const Jet2 w = kummer_m_jet(a, b, x);
            CHECK(kummer_ode_residual(w, a, b, x) < 1e-10);
        }
    }
}

TEST_CASE("derivative identity M'(a,b,x) = (a/b) M(a+1,b+1,x)") {
    // series-level check: compare the jet derivative against the shifted value
    for (const auto& [a, b] : {std::pair{0.7, 1.9}, {-1.3, 2.4}, {2.2, 0.6}}) {
        for (double x = 0.2; x <= 3.0; x += 0.4) {
            const Jet2 w = kummer_m_jet(a, b, x);
            const double shifted = a / b * kummer_m(a + 1.0, b + 1.0, x);
            CHECK(w.d1 == doctest::Approx(shifted).epsilon(1e-12));
        }
    }
}

TEST_CASE("second solution satisfies the ODE and is independent of M") {
    const double a = -1.3, b = 2.4;
    for (double x = 0.2; x <= 3.0; x += 0.2) {
        const Jet2 w = kummer_second_jet(a, b, x);
        CHECK(kummer_ode_residual(w, a, b, x) < 1e-10);
    }
    // Wronskian nonzero at x = 1
    const Jet2 m = kummer_m_jet(a, b, 1.0);
    const Jet2 u = kummer_second_jet(a, b, 1.0);
    CHECK(std::abs(m.f * u.d1 - u.f * m.d1) > 1e-6);
}

TEST_CASE("IntegerB: the logarithmic case is refused") {
    CHECK_THROWS_AS(kummer_second(-1.0, 3.0, 1.0), IntegerB);
    CHECK_THROWS_AS(kummer_second_jet(-1.0, 3.0, 1.0), IntegerB);
    CHECK_THROWS_AS(kummer_second(-1.0, 2.4, -1.0), std::invalid_argument);
}
