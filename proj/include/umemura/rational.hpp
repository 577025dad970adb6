#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace umemura {

/// Arbitrary-precision rational scalar in canonical form:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero stored as 0/1.
/// All arithmetic is exact; division by zero throws std::invalid_argument.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "num" or "num/den" with optional leading '-'.
    /// Throws std::invalid_argument on malformed text or zero denominator.
    static Rational from_string(std::string_view text);

    /// Adopts a value that is already canonical (as GMP mpq arithmetic
    /// guarantees for its results); skips the normalization pass.
    static Rational from_canonical(mpq_class v) {
        Rational q;
        q.v_ = std::move(v);
        return q;
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(unsigned long e) const;
    Rational abs() const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;
    /// Always "n/d", the form used by the polynomial document schema.
    std::string str_fraction() const;
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }
    mpq_class& raw() { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    mpq_class v_;
};

}  // namespace umemura
