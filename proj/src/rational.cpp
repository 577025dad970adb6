#include "umemura/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace umemura {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (mpz_sgn(v_.get_den_mpz_t()) == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    mpz_class num, den(1);
    if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: malformed numerator '" + num_part + "'");
    if (slash != std::string_view::npos) {
        const std::string den_part(text.substr(slash + 1));
        if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: malformed denominator '" + den_part + "'");
        if (mpz_sgn(den.get_mpz_t()) == 0)
            throw std::invalid_argument("Rational: zero denominator");
    }
    return Rational(mpq_class(num) / mpq_class(den));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    mpq_neg(out.v_.get_mpq_t(), v_.get_mpq_t());
    return out;
}

Rational Rational::pow(unsigned long e) const {
    Rational out(1);
    mpz_pow_ui(out.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(out.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return out;  // powers of a canonical fraction stay canonical
}

Rational Rational::abs() const {
    Rational out;
    mpq_abs(out.v_.get_mpq_t(), v_.get_mpq_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_fraction() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace umemura
