#include "umemura/bipoly.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

// Dense polynomial in r alone; normalized: no trailing zero coefficients.
using RPoly = std::vector<Rational>;

void rpoly_trim(RPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool rpoly_is_zero(const RPoly& a) { return a.empty(); }

// acc -= q * v, where acc is kept large enough by the caller.
void rpoly_submul(RPoly& acc, const RPoly& q, const RPoly& v) {
    if (q.empty() || v.empty()) return;
    if (acc.size() < q.size() + v.size() - 1) acc.resize(q.size() + v.size() - 1);
    mpq_t tmp;
    mpq_init(tmp);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            mpq_mul(tmp, q[i].raw().get_mpq_t(), v[j].raw().get_mpq_t());
            mpq_sub(acc[i + j].raw().get_mpq_t(), acc[i + j].raw().get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
}

// Exact division in Q[r]; nullopt when the remainder is nonzero.
std::optional<RPoly> rpoly_exact_div(RPoly a, const RPoly& b) {
    rpoly_trim(a);
    if (a.empty()) return RPoly{};
    if (a.size() < b.size()) return std::nullopt;
    RPoly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t jj = q.size(); jj-- > 0;) {
        Rational& top = a[jj + b.size() - 1];
        if (top.is_zero()) continue;
        Rational qc = top / lead;
        // subtract qc * b * r^jj  (the top position cancels by construction)
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[jj + i] -= qc * b[i];
        top = Rational(0);
        q[jj] = std::move(qc);
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (!a[i].is_zero()) return std::nullopt;
    rpoly_trim(q);
    return q;
}

// Dense-in-t view: c[j] is the Q[r] coefficient of t^j.
struct TVec {
    std::vector<RPoly> c;
};

TVec to_tvec(const BiPoly& p) {
    TVec out;
    out.c.resize(static_cast<std::size_t>(p.deg_t()) + 1);
    for (const auto& [key, coef] : p.terms()) {
        auto& row = out.c[static_cast<std::size_t>(key.deg_t)];
        if (row.size() <= static_cast<std::size_t>(key.deg_r))
            row.resize(static_cast<std::size_t>(key.deg_r) + 1);
        row[static_cast<std::size_t>(key.deg_r)] = coef;
    }
    return out;
}

BiPoly from_quotient(const std::vector<RPoly>& q) {
    BiPoly out;
    for (std::size_t j = 0; j < q.size(); ++j)
        for (std::size_t i = 0; i < q[j].size(); ++i)
            if (!q[j][i].is_zero())
                out.add_term({static_cast<int>(i), static_cast<int>(j)}, q[j][i]);
    return out;
}

}  // namespace

BiPoly BiPoly::constant(Rational c) {
    BiPoly p;
    p.add_term({0, 0}, c);
    return p;
}

BiPoly BiPoly::var_r() { return monomial(Rational(1), 1, 0); }

BiPoly BiPoly::var_t() { return monomial(Rational(1), 0, 1); }

BiPoly BiPoly::monomial(Rational c, int deg_r, int deg_t) {
    if (deg_r < 0 || deg_t < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    p.add_term({deg_r, deg_t}, c);
    return p;
}

BiPoly BiPoly::from_terms(std::initializer_list<std::tuple<Rational, int, int>> ts) {
    BiPoly p;
    for (const auto& [c, dr, dt] : ts) {
        if (dr < 0 || dt < 0) throw std::invalid_argument("BiPoly: negative exponent");
        p.add_term({dr, dt}, c);
    }
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == TermKey{0, 0});
}

int BiPoly::deg_r() const {
    if (terms_.empty()) return kNegInfDegree;
    return terms_.rbegin()->first.deg_r;  // map is keyed (deg_r, deg_t)
}

int BiPoly::deg_t() const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [key, coef] : terms_)
        if (key.deg_t > d) d = key.deg_t;
    return d;
}

Rational BiPoly::coeff(int deg_r, int deg_t) const {
    auto it = terms_.find({deg_r, deg_t});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(TermKey key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [key, coef] : o.terms_) add_term(key, coef);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [key, coef] : o.terms_) add_term(key, -coef);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [key, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, -coef);
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    BiPoly out;
    for (const auto& [key, coef] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), key, coef * c);
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int dr = a.deg_r() + b.deg_r();
    const int dt = a.deg_t() + b.deg_t();
    const std::size_t stride = static_cast<std::size_t>(dt) + 1;
    std::vector<mpq_class> grid((static_cast<std::size_t>(dr) + 1) * stride);
    mpq_t tmp;
    mpq_init(tmp);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            mpq_mul(tmp, ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
            mpq_class& slot = grid[static_cast<std::size_t>(ka.deg_r + kb.deg_r) * stride +
                                   static_cast<std::size_t>(ka.deg_t + kb.deg_t)];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
    BiPoly out;
    for (int i = 0; i <= dr; ++i) {
        for (int j = 0; j <= dt; ++j) {
            mpq_class& slot = grid[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
            if (mpq_sgn(slot.get_mpq_t()) != 0)
                out.terms_.emplace_hint(out.terms_.end(), TermKey{i, j},
                                        Rational::from_canonical(std::move(slot)));
        }
    }
    return out;
}

BiPoly BiPoly::derivative_t() const {
    BiPoly out;
    for (const auto& [key, coef] : terms_)
        if (key.deg_t > 0)
            out.terms_.emplace_hint(out.terms_.end(), TermKey{key.deg_r, key.deg_t - 1},
                                    coef * Rational(key.deg_t));
    return out;
}

BiPoly BiPoly::shifted_r(const Rational& c) const {
    if (c.is_zero()) return *this;
    const int max_r = deg_r();
    if (max_r <= 0) return *this;
    std::vector<Rational> cpow(static_cast<std::size_t>(max_r) + 1, Rational(1));
    for (int e = 1; e <= max_r; ++e) cpow[static_cast<std::size_t>(e)] = cpow[e - 1] * c;
    BiPoly out;
    mpz_class binom;
    for (const auto& [key, coef] : terms_) {
        const int a = key.deg_r;
        for (int k = 0; k <= a; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a),
                         static_cast<unsigned long>(k));
            out.add_term({k, key.deg_t},
                         coef * Rational(mpq_class(binom)) * cpow[static_cast<std::size_t>(a - k)]);
        }
    }
    return out;
}

Rational BiPoly::eval(const Rational& t0, const Rational& r0) const {
    if (terms_.empty()) return Rational(0);
    const int mr = deg_r(), mt = deg_t();
    std::vector<Rational> rp(static_cast<std::size_t>(mr) + 1, Rational(1));
    std::vector<Rational> tp(static_cast<std::size_t>(mt) + 1, Rational(1));
    for (int i = 1; i <= mr; ++i) rp[static_cast<std::size_t>(i)] = rp[i - 1] * r0;
    for (int j = 1; j <= mt; ++j) tp[static_cast<std::size_t>(j)] = tp[j - 1] * t0;
    Rational acc(0);
    for (const auto& [key, coef] : terms_)
        acc += coef * rp[static_cast<std::size_t>(key.deg_r)] * tp[static_cast<std::size_t>(key.deg_t)];
    return acc;
}

double BiPoly::eval_double(double t0, double r0) const {
    if (terms_.empty()) return 0.0;
    const int mr = deg_r(), mt = deg_t();
    std::vector<double> rp(static_cast<std::size_t>(mr) + 1, 1.0);
    std::vector<double> tp(static_cast<std::size_t>(mt) + 1, 1.0);
    for (int i = 1; i <= mr; ++i) rp[static_cast<std::size_t>(i)] = rp[i - 1] * r0;
    for (int j = 1; j <= mt; ++j) tp[static_cast<std::size_t>(j)] = tp[j - 1] * t0;
    double acc = 0.0;
    for (const auto& [key, coef] : terms_)
        acc += coef.to_double() * rp[static_cast<std::size_t>(key.deg_r)] *
               tp[static_cast<std::size_t>(key.deg_t)];
    return acc;
}

BiPoly BiPoly::substitute_r(const Rational& r0) const {
    if (terms_.empty()) return {};
    const int mr = deg_r();
    std::vector<Rational> rp(static_cast<std::size_t>(std::max(mr, 0)) + 1, Rational(1));
    for (int i = 1; i <= mr; ++i) rp[static_cast<std::size_t>(i)] = rp[i - 1] * r0;
    BiPoly out;
    for (const auto& [key, coef] : terms_)
        out.add_term({0, key.deg_t}, coef * rp[static_cast<std::size_t>(key.deg_r)]);
    return out;
}

BiPoly BiPoly::leading_t_coefficient() const {
    if (terms_.empty()) return {};
    const int top = deg_t();
    BiPoly out;
    for (const auto& [key, coef] : terms_)
        if (key.deg_t == top) out.add_term({key.deg_r, 0}, coef);
    return out;
}

namespace detail {

BiPoly exact_div_any(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (p.is_zero()) return {};
    if (d.is_constant()) return p.scaled(Rational(1) / d.coeff(0, 0));
    const int dt_d = d.deg_t();
    if (p.deg_t() < dt_d) throw NotDivisible("exact_div: degree of dividend below divisor");
    TVec P = to_tvec(p);
    TVec D = to_tvec(d);
    const RPoly& lead = D.c[static_cast<std::size_t>(dt_d)];
    std::vector<RPoly> q(P.c.size() - static_cast<std::size_t>(dt_d));
    for (std::size_t jj = q.size(); jj-- > 0;) {
        RPoly& cur = P.c[jj + static_cast<std::size_t>(dt_d)];
        rpoly_trim(cur);
        if (rpoly_is_zero(cur)) continue;
        auto qj = rpoly_exact_div(cur, lead);
        if (!qj) throw NotDivisible("exact_div: leading coefficient not divisible in Q[r]");
        cur.clear();
        for (int i = 0; i < dt_d; ++i)
            rpoly_submul(P.c[jj + static_cast<std::size_t>(i)], *qj,
                         D.c[static_cast<std::size_t>(i)]);
        q[jj] = std::move(*qj);
    }
    for (int i = 0; i < dt_d; ++i) {
        rpoly_trim(P.c[static_cast<std::size_t>(i)]);
        if (!rpoly_is_zero(P.c[static_cast<std::size_t>(i)]))
            throw NotDivisible("exact_div: nonzero remainder");
    }
    return from_quotient(q);
}

}  // namespace detail

BiPoly exact_div(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (d.leading_t_coefficient().deg_r() > 0)
        throw UnsupportedDivisor("exact_div: leading t-coefficient of divisor depends on r");
    return detail::exact_div_any(p, d);
}

}  // namespace umemura
