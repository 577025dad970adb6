#include "umemura/linear_system.hpp"

#include <cmath>
#include <stdexcept>

#include "umemura/errors.hpp"

namespace umemura {

Mat2 matrix_A(double t, double lambda, double r) {
    if (t == 0.0) throw SingularPoint("matrix_A: t = 0");
    const double diag = (0.5 / t) * (lambda - 0.75 * t);
    return {-diag, t / 8.0 - r, -1.0 / t, diag};
}

CoefficientMatrix::CoefficientMatrix(Rational lambda, Rational r)
    : lambda_(std::move(lambda)), r_(std::move(r)) {}

Mat2Q CoefficientMatrix::at_exact(const Rational& t) const {
    if (t.is_zero()) throw SingularPoint("CoefficientMatrix: t = 0");
    const Rational diag =
        (lambda_ - Rational(3, 4) * t) / (Rational(2) * t);
    Mat2Q m;
    m.a11 = -diag;
    m.a12 = t * Rational(1, 8) - r_;
    m.a21 = -(Rational(1) / t);
    m.a22 = diag;
    return m;
}

Mat2 CoefficientMatrix::at(double t) const {
    return matrix_A(t, lambda_.to_double(), r_.to_double());
}

std::vector<LinearState> LinearPath::states() const {
    std::vector<LinearState> out;
    out.reserve(rk.nodes.size());
    for (const auto& node : rk.nodes)
        out.push_back({node.t, node.y[0], node.y[1], lambda, r});
    return out;
}

LinearState LinearPath::state_at(double t) const {
    const auto y = rk.sample(t);
    return {t, y[0], y[1], lambda, r};
}

LinearPath integrate_linear(double t0, double t1, std::array<double, 2> y0, double lambda,
                            double r, double rtol, double atol) {
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    if (lo <= 0.0 && hi >= 0.0)
        throw std::invalid_argument("integrate_linear: interval crosses t = 0");
    if (lo <= 8.0 * r && hi >= 8.0 * r)
        throw std::invalid_argument("integrate_linear: interval crosses t = 8r");
    LinearPath path;
    path.lambda = lambda;
    path.r = r;
    path.rk = integrate_rk45<2>(
        [lambda, r](double t, const std::array<double, 2>& y, std::array<double, 2>& dy) {
            const Mat2 a = matrix_A(t, lambda, r);
            dy[0] = a.a11 * y[0] + a.a12 * y[1];
            dy[1] = a.a21 * y[0] + a.a22 * y[1];
        },
        t0, t1, y0, rtol, atol);
    return path;
}

double f_from_Y(const LinearState& s) {
    if (s.y1 == 0.0) throw ZeroY1("f_from_Y: Y1 = 0");
    const double denom = s.t / 8.0 - s.r;
    if (denom == 0.0) throw SingularPoint("f_from_Y: t = 8r");
    const Mat2 a = matrix_A(s.t, s.lambda, s.r);
    const double dy1 = a.a11 * s.y1 + a.a12 * s.y2;
    const double bracket = dy1 / s.y1 + (0.5 / s.t) * (s.lambda - 0.75 * s.t);
    return s.lambda / denom * bracket;
}

double riccati_residual_from_f(double t, double f, double f_t, double lambda, double r) {
    return std::abs(t * lambda * f_t + t * (t / 8.0 - r) * f * f -
                    (lambda * lambda - 0.75 * t * lambda) * f + lambda * lambda);
}

double riccati_residual_at(double t, double y1, double y2, double lambda, double r) {
    if (y1 == 0.0) throw ZeroY1("riccati_residual_at: Y1 = 0");
    const Mat2 a = matrix_A(t, lambda, r);
    const double dy1 = a.a11 * y1 + a.a12 * y2;
    const double dy2 = a.a21 * y1 + a.a22 * y2;
    const double f = lambda * y2 / y1;
    const double f_t = lambda * (dy2 * y1 - y2 * dy1) / (y1 * y1);
    return riccati_residual_from_f(t, f, f_t, lambda, r);
}

double riccati_numeric_residual(const LinearPath& path, int dense_per_step) {
    double worst = 0.0;
    const auto& nodes = path.rk.nodes;
    auto consider = [&](double t, double y1, double y2) {
        worst = std::max(worst, riccati_residual_at(t, y1, y2, path.lambda, path.r));
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        consider(nodes[i].t, nodes[i].y[0], nodes[i].y[1]);
        if (i + 1 < nodes.size()) {
            for (int s = 1; s <= dense_per_step; ++s) {
                const double frac = static_cast<double>(s) / (dense_per_step + 1);
                const double t = nodes[i].t + frac * (nodes[i + 1].t - nodes[i].t);
                const auto y = path.rk.sample(t);
                consider(t, y[0], y[1]);
            }
        }
    }
    return worst;
}

std::vector<PathSample> path_samples(const LinearPath& path) {
    std::vector<PathSample> out;
    out.reserve(path.rk.nodes.size());
    for (const auto& node : path.rk.nodes) {
        PathSample row;
        row.t = node.t;
        row.y1 = node.y[0];
        row.y2 = node.y[1];
        row.f = path.lambda * row.y2 / row.y1;
        row.residual = riccati_residual_at(row.t, row.y1, row.y2, path.lambda, path.r);
        out.push_back(row);
    }
    return out;
}

double wronskian(const LinearPath& a, const LinearPath& b, double t) {
    const auto ya = a.rk.sample(t);
    const auto yb = b.rk.sample(t);
    return ya[0] * yb[1] - yb[0] * ya[1];
}

double wronskian_drift(double lambda, double r, double t0, double t1, double rtol,
                       double atol) {
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    if ((lo <= 0.0 && hi >= 0.0) || (lo <= 8.0 * r && hi >= 8.0 * r))
        throw std::invalid_argument("wronskian_drift: interval crosses a singular point");
    const auto path = integrate_rk45<4>(
        [lambda, r](double t, const std::array<double, 4>& y, std::array<double, 4>& dy) {
            const Mat2 a = matrix_A(t, lambda, r);
            dy[0] = a.a11 * y[0] + a.a12 * y[1];
            dy[1] = a.a21 * y[0] + a.a22 * y[1];
            dy[2] = a.a11 * y[2] + a.a12 * y[3];
            dy[3] = a.a21 * y[2] + a.a22 * y[3];
        },
        t0, t1, {1.0, 0.0, 0.0, 1.0}, rtol, atol);
    const auto w_at = [](const std::array<double, 4>& y) {
        return y[0] * y[3] - y[2] * y[1];
    };
    const double w0 = w_at(path.nodes.front().y);
    double drift = 0.0;
    for (const auto& node : path.nodes)
        drift = std::max(drift, std::abs(w_at(node.y) - w0) / std::abs(w0));
    return drift;
}

}  // namespace umemura
