#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "umemura/errors.hpp"
#include "umemura/heunc.hpp"
#include "umemura/rk45.hpp"

using namespace umemura;

namespace {

HeunCParams sample_params(std::mt19937& gen) {
    std::uniform_real_distribution<double> small(-2.0, 2.0);
    std::uniform_real_distribution<double> beta_dist(-0.8, 3.0);
    std::uniform_real_distribution<double> wide(-3.0, 3.0);
    HeunCParams p;
    p.alpha = small(gen);
    p.beta = beta_dist(gen);
    p.gamma = small(gen);
    p.delta = wide(gen);
    p.eta = wide(gen);
    return p;
}

double ode_residual(const HeunCParams& p, double z, const Jet2& y) {
    const double mu = heunc_mu(p);
    const double nu = heunc_nu(p);
    const double py = (p.alpha + (p.beta + 1.0) / z + (p.gamma + 1.0) / (z - 1.0)) * y.d1;
    const double qy = (mu / z + nu / (z - 1.0)) * y.f;
    return std::abs(y.d2 + py + qy) / (std::abs(y.d2) + std::abs(py) + std::abs(qy) + 1e-300);
}

}  // namespace

TEST_CASE("normalization and v1 are exact") {
    std::mt19937 gen(42);
    for (int draw = 0; draw < 10; ++draw) {
        const HeunCParams p = sample_params(gen);
        CHECK(heunc_series(p, 0.0) == 1.0);
        const auto v = heunc_coefficients(p, 3);
        CHECK(v[0] == 1.0);
        CHECK(v[1] == -heunc_mu(p) / (p.beta + 1.0));
    }
}

TEST_CASE("accessory parameters mu and nu") {
    HeunCParams p;
    p.alpha = 2.0;
    p.beta = 1.5;
    p.gamma = -2.0;
    p.delta = 0.25;
    p.eta = -1.0;
    CHECK(heunc_mu(p) == doctest::Approx(0.5 * (2.0 - 1.5 + 2.0 + 3.0 + 3.0) + 1.0));
    CHECK(heunc_nu(p) == doctest::Approx(0.5 * (2.0 + 1.5 - 2.0 - 4.0 - 3.0) + 0.25 - 1.0));
}

TEST_CASE("defining-ODE residual below 1e-9 on |z| <= 0.5") {
    std::mt19937 gen(4242);
    for (int draw = 0; draw < 20; ++draw) {
        const HeunCParams p = sample_params(gen);
        for (double z = -0.5; z <= 0.5; z += 0.1) {
            if (std::abs(z) < 1e-9) continue;
            CHECK(ode_residual(p, z, heunc_jet(p, z)) < 1e-9);
        }
    }
}

TEST_CASE("series agrees with numerical integration of the defining equation") {
    std::mt19937 gen(99);
    for (int draw = 0; draw < 5; ++draw) {
        const HeunCParams p = sample_params(gen);
        const double mu = heunc_mu(p), nu = heunc_nu(p);
        const double z0 = 0.05;
        const Jet2 seed = heunc_jet(p, z0);
        auto rhs = [&](double z, const std::array<double, 2>& y, std::array<double, 2>& dy) {
            dy[0] = y[1];
            dy[1] = -(p.alpha + (p.beta + 1.0) / z + (p.gamma + 1.0) / (z - 1.0)) * y[1] -
                    (mu / z + nu / (z - 1.0)) * y[0];
        };
        const auto path = integrate_rk45<2>(rhs, z0, 0.6, {seed.f, seed.d1}, 1e-12, 1e-14);
        for (double z = 0.1; z <= 0.6; z += 0.1) {
            const double series = heunc_series(p, z);
            CHECK(path.sample(z)[0] ==
                  doctest::Approx(series).epsilon(1e-8).scale(std::max(1.0, std::abs(series))));
        }
    }
}

TEST_CASE("disk guard and degenerate beta") {
    HeunCParams p;
    p.beta = 0.5;
    p.z = 0.96;
    CHECK_THROWS_AS(heunc_series(p), OutsideDisk);
    CHECK_THROWS_AS(heunc_jet(p, -0.95), OutsideDisk);
    CHECK_NOTHROW(heunc_series(p, 0.9));
    p.beta = -2.0;
    CHECK_THROWS_AS(heunc_series(p, 0.1), InvalidBeta);
    CHECK_THROWS_AS(heunc_coefficients(p, 4), InvalidBeta);
}
