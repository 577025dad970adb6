#pragma once

#include <utility>
#include <vector>

#include "umemura/entries.hpp"

namespace umemura {

/// Truncated formal series F(t, lambda) = sum_{n=0}^{N} a_n lambda^{-n}
/// with bivariate polynomial coefficients.
struct LambdaSeries {
    RMode r_value;
    std::vector<BiPoly> coeffs;  // coeffs[n] multiplies lambda^{-n}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

LambdaSeries truncated_F(int n_max, const RMode& r = std::nullopt);

/// Expands R = t lambda F_t + t (t/8 - r) F^2 - (lambda^2 - (3/4) t lambda) F
/// + lambda^2 and collects the coefficient of every order that the truncation
/// fully determines: lambda^2 down to lambda^{-(N-2)}. Lower orders are
/// truncation artifacts and are not reported. Every returned polynomial must
/// be zero for the identity to hold.
std::vector<std::pair<int, BiPoly>> riccati_formal_residual(const LambdaSeries& f);
std::vector<std::pair<int, BiPoly>> riccati_formal_residual(int n_max,
                                                            const RMode& r = std::nullopt);

}  // namespace umemura
