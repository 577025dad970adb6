// Embedded Dormand-Prince 5(4) integrator with adaptive step control and
// cubic Hermite dense output. Header-only and generic over the state
// dimension; the coefficients are the standard DOPRI5 tableau.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "umemura/errors.hpp"

namespace umemura {

template <int N>
struct RkPath {
    struct Node {
        double t;
        std::array<double, N> y;
        std::array<double, N> f;  // derivative at t, for Hermite interpolation
    };
    std::vector<Node> nodes;

    double t_begin() const { return nodes.front().t; }
    double t_end() const { return nodes.back().t; }

    /// Cubic Hermite interpolation between the two bracketing accepted steps.
    std::array<double, N> sample(double t) const {
        const bool forward = nodes.back().t >= nodes.front().t;
        std::size_t lo = 0;
        std::size_t hi = nodes.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            const bool left = forward ? (nodes[mid].t <= t) : (nodes[mid].t >= t);
            (left ? lo : hi) = mid;
        }
        const Node& a = nodes[lo];
        const Node& b = nodes[hi];
        const double h = b.t - a.t;
        if (h == 0.0) return a.y;
        const double s = (t - a.t) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        std::array<double, N> out;
        for (int i = 0; i < N; ++i)
            out[static_cast<std::size_t>(i)] =
                h00 * a.y[static_cast<std::size_t>(i)] + h10 * h * a.f[static_cast<std::size_t>(i)] +
                h01 * b.y[static_cast<std::size_t>(i)] + h11 * h * b.f[static_cast<std::size_t>(i)];
        return out;
    }
};

/// Integrates y' = rhs(t, y) from t0 to t1 (either direction). Throws
/// StepUnderflow when the controller cannot make progress.
template <int N, class F>
RkPath<N> integrate_rk45(F&& rhs, double t0, double t1, std::array<double, N> y0,
                         double rtol = 1e-10, double atol = 1e-12) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference between the 5th- and embedded 4th-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    using State = std::array<double, N>;
    const double span = t1 - t0;
    RkPath<N> path;
    if (span == 0.0) {
        State f0;
        rhs(t0, y0, f0);
        path.nodes.push_back({t0, y0, f0});
        return path;
    }
    const double dir = span > 0 ? 1.0 : -1.0;
    double t = t0;
    State y = y0;
    State k1;
    rhs(t, y, k1);
    path.nodes.push_back({t, y, k1});

    double h = dir * std::min(1e-3 * std::abs(span), 1e-2);
    const double h_max = std::abs(span);
    State k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
    while (dir * (t1 - t) > 0.0) {
        if (std::abs(h) > h_max) h = dir * h_max;
        bool last = false;
        if (dir * (t + h - t1) >= 0.0) {
            h = t1 - t;
            last = true;  // land on t1 exactly, no residual rounding step
        }
        if (std::abs(h) <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
            throw StepUnderflow("integrate_rk45: step size underflow at t = " + std::to_string(t));

        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (int i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);
        for (int i = 0; i < N; ++i)
            yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);

        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = yerr[i] / sc;
            err += r * r;
        }
        err = std::sqrt(err / N);

        if (err <= 1.0) {
            t = last ? t1 : t + h;
            y = ynew;
            k1 = k7;  // FSAL
            path.nodes.push_back({t, y, k1});
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
        h *= factor;
    }
    return path;
}

}  // namespace umemura
