#include "qholo/ratfunc.hpp"

#include <stdexcept>

namespace qholo {

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
        // gcd is computed on min-exponent-0 shifts; align before dividing
        num_ = num_.shifted(-num_.min_exp()).exact_div(g).shifted(num_.min_exp());
        den_ = den_.shifted(-den_.min_exp()).exact_div(g).shifted(den_.min_exp());
    }
    // canonical unit: den gets min exponent 0 and leading coefficient 1
    int shift = den_.min_exp();
    Rational lc = den_.shifted(-shift).leading_coeff();
    den_ = den_.shifted(-shift).scaled(1 / lc);
    num_ = num_.shifted(-shift).scaled(1 / lc);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

const LaurentPoly& RatFunc::as_poly() const {
    if (!den_.is_one())
        throw std::domain_error("RatFunc: value is not a Laurent polynomial: " + str());
    return num_;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qholo
