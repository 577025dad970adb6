#pragma once

#include "umemura/jet.hpp"

namespace umemura {

struct KummerParams {
    double a = 0, b = 0, x = 0;
};

/// Kummer's M(a, b, x) = sum (a)_n/(b)_n x^n/n!. The series terminates
/// exactly when a is a nonpositive integer; otherwise summation stops once
/// ten consecutive terms fall below 1e-17 of the partial sum.
/// Throws InvalidB for b in {0, -1, -2, ...}.
double kummer_m(double a, double b, double x);
double kummer_m(const KummerParams& p);

/// M together with d/dx and d2/dx2 (from the contiguous-parameter identity
/// M'(a,b,x) = (a/b) M(a+1, b+1, x)).
Jet2 kummer_m_jet(double a, double b, double x);

/// Standard second Frobenius solution x^{1-b} M(a-b+1, 2-b, x) of Kummer's
/// equation, defined here for non-integer b and x > 0 only; the logarithmic
/// integer-b case throws IntegerB.
double kummer_second(double a, double b, double x);
Jet2 kummer_second_jet(double a, double b, double x);

}  // namespace umemura
