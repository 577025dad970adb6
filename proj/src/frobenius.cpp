#include "umemura/frobenius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

// Limit of x * p(t0 + x) (power = 1) or x^2 * q(t0 + x) (power = 2) as
// x -> 0+. Samples use the exactly representable offsets x_i = (t0 + h_i) - t0
// so that coefficient evaluations see no cancellation noise, then Neville
// extrapolation to zero over those offsets. Geometric growth of the raw
// samples is treated as divergence (irregular point).
double one_sided_limit(const std::function<double(double)>& coeff, double t0, int power,
                       double h0, bool& diverged) {
    constexpr int kLevels = 18;
    std::vector<double> x(kLevels), diag(kLevels);
    std::vector<std::vector<double>> table(kLevels);
    diverged = false;
    double best = 0.0, best_diff = std::numeric_limits<double>::infinity();
    double h = h0;
    int growth_streak = 0;
    for (int i = 0; i < kLevels; ++i, h /= 2.0) {
        const double t = t0 + h;
        const double xi = t - t0;  // exact for small offsets (Sterbenz)
        if (xi == 0.0) break;
        const double raw = (power == 1 ? xi : xi * xi) * coeff(t);
        if (!std::isfinite(raw)) {
            diverged = true;
            return 0.0;
        }
        x[static_cast<std::size_t>(i)] = xi;
        auto& row = table[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i) + 1);
        row[0] = raw;
        for (int j = 1; j <= i; ++j) {
            const double xi_j = x[static_cast<std::size_t>(i - j)];
            row[static_cast<std::size_t>(j)] =
                (xi * table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -
                 xi_j * row[static_cast<std::size_t>(j - 1)]) /
                (xi - xi_j);
        }
        diag[static_cast<std::size_t>(i)] = row.back();
        if (i >= 1) {
            const double diff = std::abs(diag[static_cast<std::size_t>(i)] -
                                         diag[static_cast<std::size_t>(i - 1)]);
            const double scale = std::max(1.0, std::abs(diag[static_cast<std::size_t>(i)]));
            if (diff < best_diff) {
                best_diff = diff;
                best = diag[static_cast<std::size_t>(i)];
            }
            if (i >= 3 && diff < 1e-14 * scale) return diag[static_cast<std::size_t>(i)];
            // raw samples doubling as h halves means the limit does not exist
            growth_streak = std::abs(raw) > 1.7 * std::abs(table[static_cast<std::size_t>(i - 1)][0]) &&
                                    std::abs(raw) > 1.0
                                ? growth_streak + 1
                                : 0;
            if (growth_streak >= 5) {
                diverged = true;
                return 0.0;
            }
        }
    }
    if (best_diff < 1e-8 * std::max(1.0, std::abs(best))) return best;
    diverged = true;
    return 0.0;
}

}  // namespace

std::pair<double, double> frobenius_exponents(const OdeCoefficients& ode, double t0,
                                              double h0) {
    bool div_p = false, div_q = false;
    const double p0 = one_sided_limit(ode.p, t0, 1, h0, div_p);
    const double q0 = one_sided_limit(ode.q, t0, 2, h0, div_q);
    if (div_p || div_q)
        throw IrregularPoint("frobenius_exponents: no finite indicial limits at t0 = " +
                             std::to_string(t0));
    // mu(mu-1) - p0 mu - q0 = 0
    const double b = 1.0 + p0;
    const double disc = b * b + 4.0 * q0;
    if (disc < 0.0)
        throw std::domain_error("frobenius_exponents: complex indicial roots");
    const double root = std::sqrt(disc);
    return {0.5 * (b + root), 0.5 * (b - root)};
}

}  // namespace umemura
