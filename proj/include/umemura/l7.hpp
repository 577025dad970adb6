#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "umemura/frobenius.hpp"
#include "umemura/jet.hpp"
#include "umemura/rational.hpp"

namespace umemura {

/// Coefficients of the linear second-order equation Y'' = p Y' + q Y obtained
/// from the Riccati linearization:
///   p(t) = 1/(t - 8r)
///   q(t) = lambda/(2t^2) + (1/(t-8r))(lambda/(2t) - 3/8)
///          + (1/4)(lambda/t - 3/4)^2 - (1/t)(t/8 - r)
struct L7Coefficients {
    double lambda = 0, r = 0;

    double p(double t) const;
    double q(double t) const;
    OdeCoefficients ode() const;
};

L7Coefficients l7_coefficients(double lambda, double r);

/// Exact-rational evaluations of the same coefficients, plus the q obtained
/// by eliminating Y2 from the first-order system; the two q routes must agree
/// identically (checked at random rational points).
Rational l7_p_exact(const Rational& t, const Rational& r);
Rational l7_q_exact(const Rational& t, const Rational& lambda, const Rational& r);
Rational l7_q_from_system(const Rational& t, const Rational& lambda, const Rational& r);

/// |Y'' - p Y' - q Y| / (|Y''| + |p Y'| + |q Y|) for a candidate jet.
/// Scale-invariant, so any constant multiple of a candidate scores the same.
double l7_relative_residual(const Jet2& y, double t, double lambda, double r);

/// Closed-form candidate solutions of the linearized equation, as jets in t.
/// Kummer branches exist for r = 0, Heun branches for r != 0.
Jet2 kummer_branch_candidate(double lambda, double t);             // t^{lambda/2+2} branch
Jet2 kummer_second_branch_candidate(double lambda, double t);      // t^{-lambda/2}, non-integer lambda
Jet2 heun_branch_candidate(double lambda, double r, double t, bool first_branch);

struct BranchCheck {
    std::string branch;
    double lambda = 0, r = 0;
    double max_residual = 0;
    bool pass = false;
    bool evaluated = false;  // false when the branch is skipped (resonant case)
    std::string note;
    std::vector<std::array<double, 3>> samples;  // (t, candidate, residual)
};

/// Residual report for the r = 0 closed form
///   Y1 = (1/4)^{lambda/2+3/2} t^{lambda/2+2} e^{-t/8} M(-lambda, lambda+3, t/4)
/// over the grid; pass threshold 1e-9 relative.
BranchCheck verify_kummer_branch(double lambda, std::span<const double> t_grid);
BranchCheck verify_kummer_second_branch(double lambda, std::span<const double> t_grid);

/// Max relative deviation between the Kummer closed form and a numerical
/// integration of the linearized equation matched at t_match.
double kummer_branch_vs_integration(double lambda, std::span<const double> t_grid,
                                    double t_match = 1.0);

/// Residual reports for the r != 0 confluent-Heun closed forms
///   Y1 = t^{1+lambda/2} e^{t/8} Hc(2r, 1+lambda, -2, delta, eta, t/(8r))
///   Y1 = t^{-lambda/2}  e^{t/8} Hc(2r, -1-lambda, -2, delta, eta, t/(8r))
/// with delta = r(3+3lambda-8r), eta = (1/2)(-1-6r)lambda + 8r^2 + 1/2.
/// Each branch gets its own verdict: PASS below 1e-8, MISMATCH otherwise with
/// the parameter set recorded; the resonant second branch (integer lambda) is
/// reported as not evaluated. Grid points must satisfy 0 < t < 0.95 |8r|.
std::vector<BranchCheck> verify_heun_branch(double lambda, double r,
                                            std::span<const double> t_grid);

/// Default grid for the Heun checks: fractions of the disk radius |8r|.
std::vector<double> heun_default_grid(double r);

}  // namespace umemura
