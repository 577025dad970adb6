#include "umemura/lambda_series.hpp"

#include <stdexcept>

namespace umemura {

LambdaSeries truncated_F(int n_max, const RMode& r) {
    LambdaSeries f;
    f.r_value = r;
    f.coeffs = compute_entries(n_max, r).entries;
    return f;
}

std::vector<std::pair<int, BiPoly>> riccati_formal_residual(const LambdaSeries& f) {
    const int n_top = f.order();
    if (n_top < 2)
        throw std::invalid_argument("riccati_formal_residual: need truncation order >= 2");
    const auto& a = f.coeffs;
    const BiPoly t = BiPoly::var_t();
    const BiPoly quad_mult =
        t * (BiPoly::monomial(Rational(1, 8), 0, 1) - r_as_poly(f.r_value));

    std::vector<std::pair<int, BiPoly>> out;
    out.reserve(static_cast<std::size_t>(n_top) + 1);
    for (int k = 2; k >= 2 - n_top; --k) {
        BiPoly res;
        if (k == 2) res += BiPoly::constant(Rational(1));  // + lambda^2
        // t lambda F_t and (3/4) t lambda F land at order 1 - n
        if (const int n = 1 - k; n >= 0 && n <= n_top) {
            res += t * a[static_cast<std::size_t>(n)].derivative_t();
            res += t.scaled(Rational(3, 4)) * a[static_cast<std::size_t>(n)];
        }
        // -lambda^2 F lands at order 2 - n
        if (const int n = 2 - k; n >= 0 && n <= n_top)
            res -= a[static_cast<std::size_t>(n)];
        // t (t/8 - r) F^2 lands at order -m
        if (const int m = -k; m >= 0) {
            BiPoly conv;
            for (int j = 0; j <= m; ++j)
                conv += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(m - j)];
            res += quad_mult * conv;
        }
        out.emplace_back(k, std::move(res));
    }
    return out;
}

std::vector<std::pair<int, BiPoly>> riccati_formal_residual(int n_max, const RMode& r) {
    const LambdaSeries f = truncated_F(n_max, r);
    return riccati_formal_residual(f);
}

}  // namespace umemura
