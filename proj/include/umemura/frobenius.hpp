#pragma once

#include <functional>
#include <utility>

namespace umemura {

/// Second-order linear ODE in the form Y'' = p(t) Y' + q(t) Y.
struct OdeCoefficients {
    std::function<double(double)> p, q;
};

/// Indicial exponents at a regular singular point t0: the roots of
///   mu (mu - 1) - p0 mu - q0 = 0,
/// where p0 = lim (t-t0) p(t) and q0 = lim (t-t0)^2 q(t), extracted by
/// Richardson extrapolation of one-sided samples t0 + h. Returns the pair
/// (larger, smaller). Throws IrregularPoint when the limits diverge and
/// std::domain_error when the indicial roots are not real.
std::pair<double, double> frobenius_exponents(const OdeCoefficients& ode, double t0,
                                              double h0 = 1.0 / 64);

}  // namespace umemura
