#pragma once

#include <span>
#include <vector>

#include "umemura/ratfunc.hpp"
#include "umemura/sigma.hpp"

namespace umemura {

/// Painleve V parameter tuple (alpha, beta, gamma, delta). Entries are
/// polynomials in r so that symbolic-r verification works; all are constants
/// when r is numeric. delta is always -1/2 and gamma is the integer n.
struct PVParams {
    BiPoly alpha, beta, gamma, delta;
};

/// (2 r^2, -2 (r - n/2)^2, n, -1/2)
PVParams pv_parameters(int n, const RMode& r = std::nullopt);

/// Rational solution
///   y = - sigma_n(t, r+1/2) sigma_{n+1}(t, r+1/4)
///       / ( sigma_n(t, r) sigma_{n+1}(t, r+3/4) )
/// with numerator and denominator kept as unreduced products.
struct RationalSolution {
    int n = 0;
    RMode r_value;
    RatFunc y;
};

/// Builds the solution symbolically and substitutes the numeric r afterwards;
/// the engine must be a symbolic-r engine (used to shift sigma in r).
RationalSolution build_rational_solution(int n, const RMode& r, SigmaEngine& symbolic_engine);
RationalSolution build_rational_solution(int n, const RMode& r = std::nullopt);

/// Cross-multiplied numerator of (LHS - RHS) of the Painleve V equation
///   y'' = (1/(2y) + 1/(y-1)) y'^2 - y'/t + ((y-1)^2/t^2)(alpha y + beta/y)
///         + gamma y/t + delta y(y+1)/(y-1)
/// evaluated at sol.y with exact rational-function calculus. The zero
/// polynomial certifies the solution exactly. Throws DegenerateDenominator
/// when the common denominator degenerates (y constant 0 or 1).
BiPoly pv_residual(const RationalSolution& sol, const PVParams& params);

struct SamplePoint {
    Rational t;
    bool pole = false;
    Rational value;  // meaningful only when !pole
};

/// Exact evaluation of y over a grid; denominator zeros are flagged
/// per point, never fatal.
std::vector<SamplePoint> sample_solution(int n, const Rational& r,
                                         std::span<const Rational> grid);

}  // namespace umemura
