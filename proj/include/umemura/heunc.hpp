#pragma once

#include <vector>

#include "umemura/jet.hpp"

namespace umemura {

/// Parameters of the confluent Heun function in the convention
///   y'' + (alpha + (beta+1)/z + (gamma+1)/(z-1)) y' + (mu/z + nu/(z-1)) y = 0,
///   mu = (alpha - beta - gamma + alpha*beta - beta*gamma)/2 - eta,
///   nu = (alpha + beta + gamma + alpha*gamma + beta*gamma)/2 + delta + eta,
/// evaluated as the solution analytic at z = 0 and normalized to 1 there.
/// Regular singular points sit at 0 and 1, so the series converges on |z| < 1.
struct HeunCParams {
    double alpha = 0, beta = 0, gamma = 0, delta = 0, eta = 0;
    double z = 0;
};

double heunc_mu(const HeunCParams& p);
double heunc_nu(const HeunCParams& p);

/// First `count` Taylor coefficients v_0, v_1, ... of the analytic solution
/// (v_0 = 1, v_1 = -mu/(beta+1)), from the three-term recurrence
///   (n+1)(n+beta+1) v_{n+1} = [n(n-1) + n(beta+gamma+2-alpha) - mu] v_n
///                             + [alpha(n-1) + mu + nu] v_{n-1}.
/// Throws InvalidBeta when beta is a negative integer (the recurrence hits a
/// zero denominator and the analytic solution degenerates).
std::vector<double> heunc_coefficients(const HeunCParams& p, int count);

/// Series value at p.z. Throws OutsideDisk for |z| >= 0.95 and NoConvergence
/// if 500 terms do not settle below the 1e-17 ratio threshold.
double heunc_series(const HeunCParams& p);
double heunc_series(const HeunCParams& p, double z);

/// Value plus d/dz and d2/dz2 by termwise differentiation of the same series.
Jet2 heunc_jet(const HeunCParams& p, double z);

}  // namespace umemura
