#include "umemura/pv.hpp"

#include <stdexcept>

#include "umemura/errors.hpp"

namespace umemura {

PVParams pv_parameters(int n, const RMode& r) {
    if (n < 0) throw std::invalid_argument("pv_parameters: n must be >= 0");
    const BiPoly rp = r_as_poly(r);
    PVParams p;
    p.alpha = (rp * rp).scaled(Rational(2));
    const BiPoly shifted = rp - BiPoly::constant(Rational(n, 2));
    p.beta = (shifted * shifted).scaled(Rational(-2));
    p.gamma = BiPoly::constant(Rational(n));
    p.delta = BiPoly::constant(Rational(-1, 2));
    return p;
}

RationalSolution build_rational_solution(int n, const RMode& r, SigmaEngine& symbolic_engine) {
    if (n < 0) throw std::invalid_argument("build_rational_solution: n must be >= 0");
    if (symbolic_engine.r_value())
        throw std::invalid_argument("build_rational_solution: engine must use symbolic r");
    const BiPoly& sn = symbolic_engine.sigma_recurrence(n);
    const BiPoly& sn1 = symbolic_engine.sigma_recurrence(n + 1);
    BiPoly num = -(sn.shifted_r(Rational(1, 2)) * sn1.shifted_r(Rational(1, 4)));
    BiPoly den = sn * sn1.shifted_r(Rational(3, 4));
    if (r) {
        num = num.substitute_r(*r);
        den = den.substitute_r(*r);
    }
    RationalSolution sol;
    sol.n = n;
    sol.r_value = r;
    sol.y = RatFunc(std::move(num), std::move(den));
    return sol;
}

RationalSolution build_rational_solution(int n, const RMode& r) {
    SigmaEngine engine;  // symbolic
    return build_rational_solution(n, r, engine);
}

// Assembles the residual over the explicit common denominator
// D = 2 t^2 a b^4 (a - b) of all six terms (y = a/b, c = a'b - ab',
// y' = c/b^2, y'' = (c'b - 2cb')/b^3), so the zero test runs on one
// polynomial. Each term's denominator divides D exactly.
BiPoly pv_residual(const RationalSolution& sol, const PVParams& params) {
    const BiPoly& a = sol.y.num();
    const BiPoly& b = sol.y.den();
    const BiPoly amb = a - b;
    if (a.is_zero() || b.is_zero() || amb.is_zero())
        throw DegenerateDenominator("pv_residual: y is degenerate (0 or 1)");

    const BiPoly t = BiPoly::var_t();
    const BiPoly t2 = t * t;
    const BiPoly da = a.derivative_t();
    const BiPoly db = b.derivative_t();
    const BiPoly c = da * b - a * db;
    const BiPoly dc = c.derivative_t();
    const BiPoly n2 = dc * b - (c * db).scaled(Rational(2));  // y'' = n2 / b^3

    const BiPoly ab = a * b;
    const BiPoly b2 = b * b;
    const BiPoly b3 = b2 * b;
    const BiPoly a2 = a * a;
    const BiPoly amb2 = amb * amb;
    const BiPoly amb3 = amb2 * amb;
    const BiPoly a2b3 = a2 * b3;

    // D * y''
    BiPoly residual = (t2 * (ab * amb) * n2).scaled(Rational(2));
    // - D * (1/(2y) + 1/(y-1)) y'^2  with 1/(2y)+1/(y-1) = (3ab - b^2)/(2a(a-b)b)... over b^4
    residual -= t2 * (b * (a.scaled(Rational(3)) - b)) * (c * c);
    // + D * y'/t
    residual += (t * (ab * b) * (amb * c)).scaled(Rational(2));
    // - D * ((y-1)^2/t^2)(alpha y + beta/y)
    residual -= (b * amb3 * (params.alpha * a2 + params.beta * b2)).scaled(Rational(2));
    // - D * gamma y / t
    residual -= (t * params.gamma * (a2b3 * amb)).scaled(Rational(2));
    // - D * delta y(y+1)/(y-1)
    residual -= (t2 * params.delta * (a2b3 * (a + b))).scaled(Rational(2));
    return residual;
}

std::vector<SamplePoint> sample_solution(int n, const Rational& r,
                                         std::span<const Rational> grid) {
    const RationalSolution sol = build_rational_solution(n, r);
    std::vector<SamplePoint> out;
    out.reserve(grid.size());
    for (const Rational& t0 : grid) {
        SamplePoint pt;
        pt.t = t0;
        const Rational den = sol.y.den().eval(t0, r);
        if (den.is_zero()) {
            pt.pole = true;
        } else {
            pt.value = sol.y.num().eval(t0, r) / den;
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace umemura
