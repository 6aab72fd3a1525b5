#pragma once

/**
 * @file ratfunc.hpp
 * @brief Exact rational functions over Q(q^(1/4)).
 *
 * Canonical form: gcd(num, den) is a unit, den has min exponent 0 and its
 * leading coefficient is 1.  Equality of canonical forms is plain
 * component equality and is used everywhere ratios arise.
 */

#include "qholo/laurent.hpp"

namespace qholo {

class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& n) : num_(n), den_(LaurentPoly::one()) {}  // NOLINT
    RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}  // NOLINT
    RatFunc(long c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}  // NOLINT
    RatFunc(const LaurentPoly& n, const LaurentPoly& d);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// denominator 1, integer coefficients, exponents multiples of 4
    bool is_integral_q() const { return den_.is_one() && num_.is_integral_q(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inv() const;  ///< throws std::domain_error on zero
    RatFunc mirrored() const { return RatFunc(num_.mirrored(), den_.mirrored()); }

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// the Laurent polynomial value; throws if the denominator is not 1
    const LaurentPoly& as_poly() const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

}  // namespace qholo
