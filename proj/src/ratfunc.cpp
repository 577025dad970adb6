#include "umemura/ratfunc.hpp"

#include "umemura/errors.hpp"

namespace umemura {

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DegenerateDenominator("RatFunc: zero denominator");
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw DegenerateDenominator("RatFunc: division by zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative_t() const {
    return RatFunc(num_.derivative_t() * den_ - num_ * den_.derivative_t(), den_ * den_);
}

}  // namespace umemura
