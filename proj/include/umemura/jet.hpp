#pragma once

#include <cmath>

namespace umemura {

/// Value together with first and second derivatives with respect to one
/// variable; products follow the Leibniz rule. Used to evaluate closed-form
/// ODE candidates and their derivatives without finite differences.
struct Jet2 {
    double f = 0.0, d1 = 0.0, d2 = 0.0;
};

inline Jet2 operator*(const Jet2& u, const Jet2& v) {
    return {u.f * v.f, u.d1 * v.f + u.f * v.d1, u.d2 * v.f + 2.0 * u.d1 * v.d1 + u.f * v.d2};
}

inline Jet2 operator+(const Jet2& u, const Jet2& v) {
    return {u.f + v.f, u.d1 + v.d1, u.d2 + v.d2};
}

inline Jet2 operator*(double c, const Jet2& u) { return {c * u.f, c * u.d1, c * u.d2}; }

/// t^e as a jet in t (t > 0).
inline Jet2 jet_power(double t, double e) {
    const double v = std::pow(t, e);
    return {v, e * v / t, e * (e - 1.0) * v / (t * t)};
}

/// e^{c t} as a jet in t.
inline Jet2 jet_exp_scaled(double t, double c) {
    const double v = std::exp(c * t);
    return {v, c * v, c * c * v};
}

/// Reinterprets a jet of g(z) at z = s*t (+ constant) as a jet in t.
inline Jet2 jet_stretch(const Jet2& g, double s) { return {g.f, s * g.d1, s * s * g.d2}; }

}  // namespace umemura
