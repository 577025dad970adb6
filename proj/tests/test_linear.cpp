#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <tuple>

#include "umemura/errors.hpp"
#include "umemura/l7.hpp"
#include "umemura/linear_system.hpp"

using namespace umemura;

TEST_CASE("matrix_A structure") {
    for (const auto& [t, lambda, r] :
         {std::tuple{1.3, 0.5, 0.2}, {2.0, 1.5, -0.7}, {0.4, 2.5, 2.0}}) {
        const Mat2 a = matrix_A(t, lambda, r);
        CHECK(a.a11 + a.a22 == 0.0);  // trace-free by construction
        CHECK(a.a12 == t / 8.0 - r);
        CHECK(a.a21 == -1.0 / t);
    }
    CHECK(matrix_A(8.0 * 0.25, 1.0, 0.25).a12 == 0.0);   // A12 vanishes at t = 8r
    CHECK(matrix_A(2.0, 1.5, 0.0).a11 == 0.0);           // diagonal vanishes at lambda = (3/4)t
    CHECK_THROWS_AS(matrix_A(0.0, 1.0, 1.0), SingularPoint);

    const CoefficientMatrix exact(Rational(3, 2), Rational(1, 3));
    const Mat2Q q = exact.at_exact(Rational(2));
    CHECK(q.a11 + q.a22 == Rational(0));
    CHECK(q.a12 == Rational(2, 8) - Rational(1, 3));
    CHECK(q.a21 == Rational(-1, 2));
    CHECK_THROWS_AS(exact.at_exact(Rational(0)), SingularPoint);
}

TEST_CASE("integration preconditions: intervals crossing 0 or 8r are rejected") {
    CHECK_THROWS_AS(integrate_linear(-1.0, 1.0, {1, 0}, 1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_linear(1.0, 3.0, {1, 0}, 1.0, 0.25), std::invalid_argument);
}

TEST_CASE("step underflow is reported for unreachable singularities") {
    // y' = -y/(t-1) integrated toward t = 1 blows up like 1/(t-1) and the
    // controller must give up rather than loop forever
    CHECK_THROWS_AS(integrate_rk45<1>(
                        [](double t, const std::array<double, 1>& y, std::array<double, 1>& dy) {
                            dy[0] = -y[0] / (t - 1.0);
                        },
                        2.0, 1.0, {1.0}, 1e-10, 1e-12),
                    StepUnderflow);
}

TEST_CASE("Wronskian of independent solutions is constant (trace-free system)") {
    for (const double lambda : {0.5, 1.5, 2.5}) {
        for (const double r : {-0.5, 2.0}) {
            // at the accepted steps only integrator error enters
            CHECK(wronskian_drift(lambda, r, 1.0, 3.0) < 1e-9);
            // interpolated samples add dense-output error, still small
            const LinearPath pa = integrate_linear(1.0, 3.0, {1.0, 0.0}, lambda, r);
            const LinearPath pb = integrate_linear(1.0, 3.0, {0.0, 1.0}, lambda, r);
            const double w0 = wronskian(pa, pb, 1.0);
            for (double t = 1.0; t <= 3.0; t += 0.125) {
                CHECK(std::abs(wronskian(pa, pb, t) - w0) < 1e-6 * std::abs(w0));
            }
        }
    }
}

TEST_CASE("flow reversibility to 1e-8") {
    const std::array<double, 2> y0 = {0.7, -0.3};
    const LinearPath there = integrate_linear(1.0, 3.0, y0, 2.5, -0.5);
    const LinearPath back =
        integrate_linear(3.0, 1.0, there.rk.nodes.back().y, 2.5, -0.5);
    CHECK(std::abs(back.rk.nodes.back().y[0] - y0[0]) < 1e-8);
    CHECK(std::abs(back.rk.nodes.back().y[1] - y0[1]) < 1e-8);
}

TEST_CASE("f_from_Y matches lambda Y2/Y1 on integrated states") {
    const LinearPath path = integrate_linear(1.0, 3.0, {1.0, 0.5}, 1.5, -0.5);
    for (const LinearState& s : path.states()) {
        const double direct = s.lambda * s.y2 / s.y1;
        CHECK(std::abs(f_from_Y(s) - direct) < 1e-9 * (std::abs(direct) + 1.0));
    }
    LinearState zero_y2{2.0, 1.3, 0.0, 1.5, -0.5};
    CHECK(f_from_Y(zero_y2) == 0.0);
    LinearState zero_y1{2.0, 0.0, 1.0, 1.5, -0.5};
    CHECK_THROWS_AS(f_from_Y(zero_y1), ZeroY1);
    LinearState at_8r{-4.0, 1.0, 1.0, 1.5, -0.5};
    CHECK_THROWS_AS(f_from_Y(at_8r), SingularPoint);
}

TEST_CASE("Riccati residual vanishes along genuine paths and flags scaled F") {
    const LinearPath path = integrate_linear(1.0, 3.0, {1.0, 0.25}, 1.5, 1.0 / 3.0 + 0.3);
    CHECK(riccati_numeric_residual(path) < 1e-8);

    // F scaled by 1.01 with F_t scaled consistently must break the identity
    const LinearState s = path.states()[3];
    const Mat2 a = matrix_A(s.t, s.lambda, s.r);
    const double dy1 = a.a11 * s.y1 + a.a12 * s.y2;
    const double dy2 = a.a21 * s.y1 + a.a22 * s.y2;
    const double f = s.lambda * s.y2 / s.y1;
    const double f_t = s.lambda * (dy2 * s.y1 - s.y2 * dy1) / (s.y1 * s.y1);
    CHECK(riccati_residual_from_f(s.t, f, f_t, s.lambda, s.r) < 1e-10);
    CHECK(riccati_residual_from_f(s.t, 1.01 * f, 1.01 * f_t, s.lambda, s.r) > 1e-3);
}

TEST_CASE("closed-form Kummer states satisfy the Riccati residual (r = 0)") {
    // Y1 from the closed form; Y2 from its defining relation
    //   Y2 = (1/(t/8 - r)) [Y1' + (1/(2t))(lambda - (3/4)t) Y1]
    const double lambda = 1.5;
    double worst = 0.0;
    for (double t = 1.0; t <= 3.0; t += 0.2) {
        const Jet2 y1 = kummer_branch_candidate(lambda, t);
        const double y2 =
            (y1.d1 + (0.5 / t) * (lambda - 0.75 * t) * y1.f) / (t / 8.0);
        worst = std::max(worst, riccati_residual_at(t, y1.f, y2, lambda, 0.0));
    }
    CHECK(worst < 1e-8);
}
