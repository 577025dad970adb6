#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "umemura/errors.hpp"
#include "umemura/heunc.hpp"
#include "umemura/l7.hpp"
#include "umemura/rk45.hpp"

using namespace umemura;
using umemura::testing::random_nonzero_rational;

TEST_CASE("coefficients of the linearized equation, general and r = 0 forms") {
    const L7Coefficients c = l7_coefficients(1.0, 1.0 / 3.0);
    CHECK(c.p(2.0) == doctest::Approx(1.0 / (2.0 - 8.0 / 3.0)).epsilon(1e-15));
    // same formula two ways at (t, lambda, r) = (2, 1, 1/3)
    const double direct = 1.0 / (2.0 * 4.0) +
                          (1.0 / (2.0 - 8.0 / 3.0)) * (1.0 / 4.0 - 3.0 / 8.0) +
                          0.25 * std::pow(0.5 - 0.75, 2) - (0.25 - 1.0 / 3.0) / 2.0;
    CHECK(c.q(2.0) == doctest::Approx(direct).epsilon(1e-14));

    // r = 0 collapses to q = (lambda^2+4lambda)/(4t^2) - 3(1+lambda)/(8t) + 1/64
    const L7Coefficients c0 = l7_coefficients(1.7, 0.0);
    for (double t = 0.5; t <= 4.0; t += 0.5) {
        const double simplified = (1.7 * 1.7 + 4.0 * 1.7) / (4.0 * t * t) -
                                  3.0 * (1.0 + 1.7) / (8.0 * t) + 1.0 / 64.0;
        CHECK(c0.q(t) == doctest::Approx(simplified).epsilon(1e-13));
        CHECK(c0.p(t) == doctest::Approx(1.0 / t).epsilon(1e-15));
    }
}

TEST_CASE("eliminating Y2 from the system reproduces the closed-form coefficients") {
    for (int draw = 0; draw < 10; ++draw) {
        const Rational t = random_nonzero_rational(7, 5);
        const Rational lambda = random_nonzero_rational(5, 3);
        const Rational r = random_nonzero_rational(5, 3);
        if ((t - Rational(8) * r).is_zero()) continue;
        CHECK(l7_q_exact(t, lambda, r) == l7_q_from_system(t, lambda, r));
        // p = A12'/A12 = 1/(t - 8r)
        CHECK(l7_p_exact(t, r) == Rational(1, 8) / (t * Rational(1, 8) - r));
    }
}

TEST_CASE("indicial exponents of the linearized equation") {
    const double lambda = 1.3;
    {
        const auto e = frobenius_exponents(l7_coefficients(lambda, 0.5).ode(), 0.0);
        CHECK(std::abs(e.first - (1.0 + 0.5 * lambda)) < 1e-12);
        CHECK(std::abs(e.second + 0.5 * lambda) < 1e-12);
    }
    {
        const auto e = frobenius_exponents(l7_coefficients(lambda, 0.5).ode(), 4.0, 0.05);
        CHECK(std::abs(e.first - 2.0) < 1e-12);
        CHECK(std::abs(e.second) < 1e-12);
    }
    {
        const auto e = frobenius_exponents(l7_coefficients(lambda, 0.0).ode(), 0.0);
        CHECK(std::abs(e.first - (2.0 + 0.5 * lambda)) < 1e-12);
        CHECK(std::abs(e.second + 0.5 * lambda) < 1e-12);
    }
}

TEST_CASE("irregular point is detected") {
    OdeCoefficients bad;
    bad.p = [](double t) { return 1.0 / (t * t); };  // double pole: irregular
    bad.q = [](double) { return 0.0; };
    CHECK_THROWS_AS(frobenius_exponents(bad, 0.0), IrregularPoint);
}

TEST_CASE("integrated solutions show the predicted leading exponent") {
    // seed Y ~ t^mu near t = 0 and check the observed log-log slope
    const double lambda = 1.3, r = 0.5;
    const L7Coefficients c = l7_coefficients(lambda, r);
    auto rhs = [&c](double t, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = c.p(t) * y[1] + c.q(t) * y[0];
    };
    const auto exponents = frobenius_exponents(c.ode(), 0.0);
    for (const double mu : {exponents.first, exponents.second}) {
        const double ta = 1e-3, tb = 2e-3;
        const auto path =
            integrate_rk45<2>(rhs, ta, tb, {std::pow(ta, mu), mu * std::pow(ta, mu - 1.0)},
                              1e-12, 1e-16);
        const double slope = std::log(path.nodes.back().y[0] / std::pow(ta, mu)) /
                             std::log(tb / ta);
        CHECK(std::abs(slope - mu) < 0.01 * std::max(1.0, std::abs(mu)));
    }
}

TEST_CASE("Wronskian of two linearized-equation solutions is proportional to t - 8r") {
    const double lambda = 0.7, r = -0.5;
    const L7Coefficients c = l7_coefficients(lambda, r);
    auto rhs = [&c](double t, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = c.p(t) * y[1] + c.q(t) * y[0];
    };
    const auto pa = integrate_rk45<2>(rhs, 1.0, 3.0, {1.0, 0.0}, 1e-12, 1e-14);
    const auto pb = integrate_rk45<2>(rhs, 1.0, 3.0, {0.0, 1.0}, 1e-12, 1e-14);
    const double c0 = (pa.sample(1.0)[0] * pb.sample(1.0)[1] -
                       pb.sample(1.0)[0] * pa.sample(1.0)[1]) /
                      (1.0 - 8.0 * r);
    for (double t = 1.0; t <= 3.0; t += 0.25) {
        const double w = pa.sample(t)[0] * pb.sample(t)[1] - pb.sample(t)[0] * pa.sample(t)[1];
        CHECK(w / (t - 8.0 * r) == doctest::Approx(c0).epsilon(1e-8));
    }
}

TEST_CASE("Kummer branch: residual, linearity in the candidate, second branch") {
    std::vector<double> grid;
    for (double t = 0.5; t <= 5.0 + 1e-12; t += 0.25) grid.push_back(t);
    const BranchCheck first = verify_kummer_branch(1.0, grid);
    CHECK(first.pass);
    CHECK(first.max_residual < 1e-9);

    // scaling the candidate cannot change the relative residual
    const Jet2 y = kummer_branch_candidate(1.0, 2.0);
    const Jet2 scaled = 17.0 * y;
    CHECK(l7_relative_residual(y, 2.0, 1.0, 0.0) ==
          doctest::Approx(l7_relative_residual(scaled, 2.0, 1.0, 0.0)).epsilon(1e-12));

    const BranchCheck second = verify_kummer_second_branch(0.7, grid);
    CHECK(second.evaluated);
    CHECK(second.pass);
    const BranchCheck resonant = verify_kummer_second_branch(1.0, grid);
    CHECK_FALSE(resonant.evaluated);

    CHECK(kummer_branch_vs_integration(1.0, grid) < 1e-7);

    CHECK_THROWS_AS(verify_kummer_branch(-3.5, grid), std::invalid_argument);
    const double nonpositive[] = {-0.5, 1.0};
    CHECK_THROWS_AS(verify_kummer_branch(1.0, nonpositive), std::invalid_argument);
}

TEST_CASE("Heun branch verdicts") {
    for (const double r : {0.5, -1.0}) {
        const auto grid = heun_default_grid(r);
        // prefactor exponents agree with the indicial roots at t = 0
        const auto e = frobenius_exponents(l7_coefficients(0.5, r).ode(), 0.0);
        CHECK(std::abs(e.first - 1.25) < 1e-12);   // 1 + lambda/2
        CHECK(std::abs(e.second + 0.25) < 1e-12);  // -lambda/2

        const auto checks = verify_heun_branch(0.5, r, grid);
        REQUIRE(checks.size() == 2);
        for (const auto& check : checks) {
            CHECK(check.evaluated);
            CHECK(check.samples.size() == grid.size());
            CHECK(check.pass);  // recorded verdict; this parameter set satisfies the equation
        }
    }
    // resonant second branch for integer lambda is reported, not evaluated
    const auto checks = verify_heun_branch(1.0, 1.0, heun_default_grid(1.0));
    CHECK(checks[0].evaluated);
    CHECK_FALSE(checks[1].evaluated);
    CHECK_FALSE(checks[1].note.empty());

    CHECK_THROWS_AS(verify_heun_branch(0.5, 0.0, heun_default_grid(1.0)),
                    std::invalid_argument);
    const double outside[] = {7.9};
    CHECK_THROWS_AS(verify_heun_branch(0.5, 1.0, outside), OutsideDisk);
}

TEST_CASE("heunc passes its own defining equation on the branch grid") {
    // internal oracle for the same z points the branch check uses
    const double lambda = 0.5, r = 1.0;
    HeunCParams p;
    p.alpha = 2.0 * r;
    p.beta = 1.0 + lambda;
    p.gamma = -2.0;
    p.delta = r * (3.0 + 3.0 * lambda - 8.0 * r);
    p.eta = 0.5 * (-1.0 - 6.0 * r) * lambda + 8.0 * r * r + 0.5;
    const double mu = heunc_mu(p), nu = heunc_nu(p);
    for (const double t : heun_default_grid(r)) {
        const double z = t / (8.0 * r);
        const Jet2 y = heunc_jet(p, z);
        const double py = (p.alpha + (p.beta + 1.0) / z + (p.gamma + 1.0) / (z - 1.0)) * y.d1;
        const double qy = (mu / z + nu / (z - 1.0)) * y.f;
        CHECK(std::abs(y.d2 + py + qy) /
                  (std::abs(y.d2) + std::abs(py) + std::abs(qy) + 1e-300) <
              1e-9);
    }
}
