#pragma once

#include <array>
#include <vector>

#include "umemura/rational.hpp"
#include "umemura/rk45.hpp"

namespace umemura {

/// One point of an integrated trajectory of the 2x2 linear system, together
/// with the (lambda, r) parameters it was produced under. Valid states keep
/// t > 0 and t != 8r.
struct LinearState {
    double t = 0, y1 = 0, y2 = 0, lambda = 0, r = 0;
};

struct Mat2 {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;
};

struct Mat2Q {
    Rational a11, a12, a21, a22;
};

/// A(t) = [[-(1/(2t))(lambda - (3/4)t), t/8 - r], [-1/t, (1/(2t))(lambda - (3/4)t)]].
/// Trace-free by construction. Throws SingularPoint at t = 0.
Mat2 matrix_A(double t, double lambda, double r);

/// The same matrix with exact rational parameters, evaluable exactly at
/// rational t and to floats anywhere away from t = 0.
class CoefficientMatrix {
public:
    CoefficientMatrix(Rational lambda, Rational r);
    Mat2Q at_exact(const Rational& t) const;  // throws SingularPoint at t = 0
    Mat2 at(double t) const;
    const Rational& lambda() const { return lambda_; }
    const Rational& r() const { return r_; }

private:
    Rational lambda_, r_;
};

/// Trajectory of Y' = A Y with dense output.
struct LinearPath {
    double lambda = 0, r = 0;
    RkPath<2> rk;

    std::vector<LinearState> states() const;
    LinearState state_at(double t) const;
};

/// Adaptive integration of the linear system over [t0, t1]; the interval must
/// exclude 0 and 8r (std::invalid_argument otherwise). StepUnderflow
/// propagates from the controller.
LinearPath integrate_linear(double t0, double t1, std::array<double, 2> y0, double lambda,
                            double r, double rtol = 1e-10, double atol = 1e-12);

/// F from the log-derivative form
///   F = (lambda/(t/8 - r)) [ Y1'/Y1 + (1/(2t))(lambda - (3/4) t) ]
/// with Y1' taken from the system. Algebraically this equals lambda Y2/Y1;
/// numeric code prefers the direct quotient, this form is kept for the
/// dedicated identity test. Throws ZeroY1 and SingularPoint (t = 8r).
double f_from_Y(const LinearState& s);

/// |t lambda F_t + t (t/8 - r) F^2 - (lambda^2 - (3/4) t lambda) F + lambda^2|
/// for externally supplied F and F_t.
double riccati_residual_from_f(double t, double f, double f_t, double lambda, double r);

/// Same residual with F = lambda Y2/Y1 and F_t in closed form from the
/// system (no finite differences).
double riccati_residual_at(double t, double y1, double y2, double lambda, double r);

/// Max residual over the path nodes and `dense_per_step` Hermite samples
/// inside every accepted step.
double riccati_numeric_residual(const LinearPath& path, int dense_per_step = 4);

/// One CSV-ready row per accepted step: t, Y1, Y2, F = lambda Y2/Y1, and the
/// closed-form residual at that state.
struct PathSample {
    double t, y1, y2, f, residual;
};
std::vector<PathSample> path_samples(const LinearPath& path);

/// Wronskian y1a*y2b - y1b*y2a of two trajectories sampled at time t.
/// Between accepted steps this interpolates, so it carries dense-output
/// error on top of integration error.
double wronskian(const LinearPath& a, const LinearPath& b, double t);

/// Max relative drift of the Wronskian of the two canonical solutions
/// ((1,0) and (0,1) initial data) along [t0, t1], evaluated at the accepted
/// steps of one combined integration so only integrator error enters.
double wronskian_drift(double lambda, double r, double t0, double t1, double rtol = 1e-10,
                       double atol = 1e-12);

}  // namespace umemura
