#pragma once

#include <initializer_list>
#include <limits>
#include <map>
#include <tuple>

#include "umemura/rational.hpp"

namespace umemura {

/// Exponent pair of a monomial r^deg_r * t^deg_t.
struct TermKey {
    int deg_r = 0;
    int deg_t = 0;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Exact polynomial in the two commuting indeterminates r and t over Rational.
///
/// Canonical form: no stored coefficient is zero; the zero polynomial has an
/// empty term map. The map is keyed by (deg_r, deg_t), so iteration walks each
/// r-degree densely in t — the access pattern the arithmetic hot loops want,
/// since the polynomials this library produces are dense in t and sparse in r.
class BiPoly {
public:
    /// Degree of the zero polynomial (stands in for minus infinity).
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    using TermMap = std::map<TermKey, Rational>;

    BiPoly() = default;

    static BiPoly constant(Rational c);
    static BiPoly var_r();
    static BiPoly var_t();
    static BiPoly monomial(Rational c, int deg_r, int deg_t);
    /// Builds from (coefficient, deg_r, deg_t) triples; repeated keys accumulate.
    static BiPoly from_terms(std::initializer_list<std::tuple<Rational, int, int>> ts);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int deg_r() const;
    int deg_t() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    /// Coefficient of r^deg_r t^deg_t (zero if absent).
    Rational coeff(int deg_r, int deg_t) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly scaled(const Rational& c) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to t; r is a constant.
    BiPoly derivative_t() const;

    /// Exact substitution r -> r + c by binomial expansion.
    BiPoly shifted_r(const Rational& c) const;

    /// Exact value p(r0, t0).
    Rational eval(const Rational& t0, const Rational& r0) const;
    double eval_double(double t0, double r0) const;

    /// Substitutes the numeric value r0 for r; the result has deg_r <= 0.
    BiPoly substitute_r(const Rational& r0) const;

    /// Coefficient of the highest t-power, as a polynomial in r (deg_t = 0).
    BiPoly leading_t_coefficient() const;

    /// Inserts c * r^deg_r t^deg_t, dropping the term if it cancels to zero.
    void add_term(TermKey key, const Rational& c);

private:
    TermMap terms_;
};

/// Exact quotient of p by d viewing both as polynomials in t over Q[r].
/// Requires the leading t-coefficient of d to be a nonzero rational constant
/// (throws UnsupportedDivisor otherwise); throws NotDivisible when the
/// remainder is nonzero.
BiPoly exact_div(const BiPoly& p, const BiPoly& d);

namespace detail {
/// Exact quotient without the constant-leading-coefficient restriction:
/// stepwise long division in t with exact divisions in Q[r]. Succeeds exactly
/// when d divides p in Q[r][t]; throws NotDivisible otherwise.
BiPoly exact_div_any(const BiPoly& p, const BiPoly& d);
}  // namespace detail

}  // namespace umemura
