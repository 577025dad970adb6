#include "umemura/kummer.hpp"

#include <cmath>
#include <string>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kTermThreshold = 1e-17;
constexpr int kTailGuard = 10;

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

double kummer_m(double a, double b, double x) {
    if (is_nonpositive_integer(b))
        throw InvalidB("kummer_m: b must not be zero or a negative integer, got b = " +
                       std::to_string(b));
    double sum = 1.0;
    double term = 1.0;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (a + n) / (b + n) * x / (n + 1);
        if (term == 0.0) return sum;  // terminating series (a nonpositive integer)
        sum += term;
        if (std::abs(term) < kTermThreshold * std::abs(sum)) {
            if (++quiet >= kTailGuard) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("kummer_m: series did not converge within " +
                        std::to_string(kMaxTerms) + " terms");
}

double kummer_m(const KummerParams& p) { return kummer_m(p.a, p.b, p.x); }

Jet2 kummer_m_jet(double a, double b, double x) {
    Jet2 jet;
    jet.f = kummer_m(a, b, x);
    jet.d1 = a / b * kummer_m(a + 1, b + 1, x);
    jet.d2 = a * (a + 1) / (b * (b + 1)) * kummer_m(a + 2, b + 2, x);
    return jet;
}

double kummer_second(double a, double b, double x) {
    if (b == std::floor(b))
        throw IntegerB("kummer_second: logarithmic case (integer b) is unsupported");
    if (x <= 0.0)
        throw std::invalid_argument("kummer_second: requires x > 0");
    return std::pow(x, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, x);
}

Jet2 kummer_second_jet(double a, double b, double x) {
    if (b == std::floor(b))
        throw IntegerB("kummer_second: logarithmic case (integer b) is unsupported");
    if (x <= 0.0)
        throw std::invalid_argument("kummer_second: requires x > 0");
    return jet_power(x, 1.0 - b) * kummer_m_jet(a - b + 1.0, 2.0 - b, x);
}

}  // namespace umemura
