#include "umemura/heunc.hpp"

#include <cmath>
#include <string>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kTermThreshold = 1e-17;
constexpr int kTailGuard = 10;
constexpr double kDiskGuard = 0.95;

void check_beta(double beta) {
    if (beta < 0.0 && beta == std::floor(beta))
        throw InvalidBeta("heunc: beta is a negative integer (" + std::to_string(beta) +
                          "); the analytic-at-0 solution degenerates");
}

// One recurrence step: returns v_{n+1} from v_n, v_{n-1}.
double next_coefficient(const HeunCParams& p, double mu, double nu, int n, double vn,
                        double vnm1) {
    const double lhs = (n + 1.0) * (n + p.beta + 1.0);
    const double an = n * (n - 1.0) + n * (p.beta + p.gamma + 2.0 - p.alpha) - mu;
    const double bn = p.alpha * (n - 1.0) + mu + nu;
    return (an * vn + bn * vnm1) / lhs;
}

}  // namespace

double heunc_mu(const HeunCParams& p) {
    return 0.5 * (p.alpha - p.beta - p.gamma + p.alpha * p.beta - p.beta * p.gamma) - p.eta;
}

double heunc_nu(const HeunCParams& p) {
    return 0.5 * (p.alpha + p.beta + p.gamma + p.alpha * p.gamma + p.beta * p.gamma) +
           p.delta + p.eta;
}

std::vector<double> heunc_coefficients(const HeunCParams& p, int count) {
    check_beta(p.beta);
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    const double mu = heunc_mu(p);
    const double nu = heunc_nu(p);
    double vnm1 = 0.0, vn = 1.0;
    for (int n = 0; n < count; ++n) {
        v.push_back(vn);
        const double vnext = next_coefficient(p, mu, nu, n, vn, vnm1);
        vnm1 = vn;
        vn = vnext;
    }
    return v;
}

double heunc_series(const HeunCParams& p) { return heunc_series(p, p.z); }

double heunc_series(const HeunCParams& p, double z) { return heunc_jet(p, z).f; }

Jet2 heunc_jet(const HeunCParams& p, double z) {
    check_beta(p.beta);
    if (std::abs(z) >= kDiskGuard)
        throw OutsideDisk("heunc: |z| = " + std::to_string(std::abs(z)) +
                          " is outside the series disk guard " + std::to_string(kDiskGuard));
    const double mu = heunc_mu(p);
    const double nu = heunc_nu(p);
    Jet2 sum{1.0, 0.0, 0.0};  // v_0 = 1 contributes only to the value
    double vnm1 = 0.0, vn = 1.0;
    double zm1 = 1.0;  // z^{m-1} for the term index m below
    double zm2 = 1.0;  // z^{m-2}; first read at m = 2 where it is z^0
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const int m = n + 1;
        const double vm = next_coefficient(p, mu, nu, n, vn, vnm1);
        const double term_d1 = m * vm * zm1;
        const double term_d2 = (m >= 2) ? m * (m - 1.0) * vm * zm2 : 0.0;
        const double term = vm * zm1 * z;
        sum.f += term;
        sum.d1 += term_d1;
        sum.d2 += term_d2;
        vnm1 = vn;
        vn = vm;
        zm2 = zm1;
        zm1 *= z;
        const double rel = std::abs(term) + std::abs(term_d1) + std::abs(term_d2);
        const double scale =
            std::abs(sum.f) + std::abs(sum.d1) + std::abs(sum.d2) + 1e-300;
        if (rel < kTermThreshold * scale) {
            if (++quiet >= kTailGuard) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("heunc: series did not settle within " + std::to_string(kMaxTerms) +
                        " terms at z = " + std::to_string(z));
}

}  // namespace umemura
