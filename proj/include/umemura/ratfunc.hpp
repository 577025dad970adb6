#pragma once

#include "umemura/bipoly.hpp"

namespace umemura {

/// Quotient of two bivariate polynomials. Never normalized: no GCD is taken,
/// so numerator and denominator grow under arithmetic, but zero-testing and
/// equality stay exact through cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(BiPoly::constant(Rational(1))) {}
    RatFunc(BiPoly num, BiPoly den);
    static RatFunc from_poly(BiPoly p) { return RatFunc(std::move(p), BiPoly::constant(Rational(1))); }
    static RatFunc constant(Rational c) { return from_poly(BiPoly::constant(std::move(c))); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws DegenerateDenominator

    /// Quotient rule; the result keeps den^2 as its denominator, unreduced.
    RatFunc derivative_t() const;

    /// Exact equality via cross-multiplied numerators.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    BiPoly num_, den_;
};

}  // namespace umemura
