#pragma once

/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in u = q^(1/4).
 *
 * Every invariant value in the library lives in Z-or-Q[q^(1/4), q^(-1/4)].
 * Exponents are integers counted in units of u, so q = u^4 and v = u^2.
 * Coefficients are arbitrary-precision rationals.  The representation is
 * canonical: no zero coefficient is ever stored, and two values are equal
 * iff their term maps are identical.
 */

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qholo {

using Rational = mpq_class;

class LaurentPoly {
public:
    /// term map: exponent in u-units -> nonzero rational coefficient
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long c);

    /// monomial c * u^e
    static LaurentPoly monomial(const Rational& c, int e_u);
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    /// u^e (so q_power(k) == u_power(4k), v_power(k) == u_power(2k))
    static LaurentPoly u_power(int e) { return monomial(1, e); }
    static LaurentPoly v_power(int e) { return monomial(1, 2 * e); }
    static LaurentPoly q_power(int e) { return monomial(1, 4 * e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    int min_exp() const;  ///< requires nonzero
    int max_exp() const;  ///< requires nonzero
    int degree_span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    const Terms& terms() const { return terms_; }
    Rational coeff(int e) const;
    void set_coeff(int e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(int e_u) const;  ///< multiply by u^e

    /// substitute u -> u^(-1) (i.e. q -> 1/q); used by the mirror flag
    LaurentPoly mirrored() const;

    /// exact division; throws std::domain_error when o does not divide *this
    LaurentPoly exact_div(const LaurentPoly& o) const;
    /// true division attempt; returns false (and leaves quot empty) if inexact
    bool try_exact_div(const LaurentPoly& o, LaurentPoly& quot) const;

    /// leading (highest-exponent) coefficient; requires nonzero
    const Rational& leading_coeff() const;

    /// monic with min exponent 0 (unit-normalized); zero maps to zero
    LaurentPoly unit_normalized() const;

    /// gcd up to the canonical unit normalization (monic, min exponent 0)
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    /// content: gcd of |coefficients| as a rational (positive), 0 for zero
    Rational content() const;

    /// membership in Z[q^{\pm 1}]: integer coefficients, exponents in 4Z
    bool is_integral_q() const;

    /// "q^(-1/2) + q^(-3/2) + ... " with quarter powers rendered as q^(k/4)
    std::string str() const;
    /// JSON array of [exponent_in_u_units, "num", "den"]
    std::string json() const;

    /// inverse of str(); throws std::invalid_argument on malformed input
    static LaurentPoly parse(const std::string& text);

private:
    void prune(int e);
    Terms terms_;
};

}  // namespace qholo
