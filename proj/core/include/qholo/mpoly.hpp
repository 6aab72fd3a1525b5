#pragma once

/**
 * @file mpoly.hpp
 * @brief Sparse multivariate Laurent polynomials over Q, and factored ratios.
 *
 * Variable 0 is always u = q^(1/4).  Variables 1..n-1 are shift symbols,
 * one per discrete variable x, standing for u^x (quarter-granular so that
 * every monomial power of q, v, or u with an affine exponent is
 * representable; q^x is symbol^4).  CoeffPoly of the operator algebra is
 * an MPoly over (u, Q) with Q at q-granularity handled by the callers.
 */

#include "qholo/laurent.hpp"
#include "qholo/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace qholo {

class MPoly {
public:
    using Expo = std::vector<int>;  ///< exponent vector, size nvars
    using Terms = std::map<Expo, Rational>;

    MPoly() : nvars_(1) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}
    MPoly(int nvars, const Rational& c);

    static MPoly monomial(int nvars, const Rational& c, const Expo& e);
    /// c * u^{e_u} * sym^{e_s}
    static MPoly sym_monomial(int nvars, const Rational& c, int e_u, int var, int e_s);
    static MPoly constant(int nvars, const Rational& c) { return MPoly(nvars, c); }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly scaled(const Rational& c) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const;  ///< arbitrary total order for keys

    /// substitute symbol var -> u^{values[var-1]} for all symbol variables
    LaurentPoly substitute(const std::vector<int>& values) const;

    /// replace symbol var by u^{du} * var (argument shift x -> x + du/?):
    /// every term gains u-exponent du * (exponent of var)
    MPoly shift_symbol(int var, int du) const;

    /// degree range of a variable over all terms: {min, max}; {0,0} if zero
    std::pair<int, int> var_range(int var) const;

    /// view as polynomial in the symbol variables with LaurentPoly coefficients
    std::map<Expo, LaurentPoly> coeff_map() const;

    /// scale so the first stored term has coefficient 1; returns the scalar
    /// that was divided out.  Zero stays zero (returns 1).
    Rational make_primitive();

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    Terms terms_;
};

/**
 * Rational expression with an expanded numerator and a denominator kept as
 * a multiset of primitive factors.  Products and least common denominators
 * never need multivariate gcd this way.
 */
class FactoredRat {
public:
    FactoredRat() : num_(MPoly(1, Rational(1))) {}
    explicit FactoredRat(const MPoly& n) : num_(n) {}

    const MPoly& num() const { return num_; }
    const std::map<MPoly, int>& den_factors() const { return den_; }

    void mul_num(const MPoly& p) { num_ *= p; }
    void mul_den_factor(MPoly f);   ///< factor is made primitive; scalar folded into num
    void mul_num_factor(MPoly f) { num_ *= f; }
    void mul(const FactoredRat& o);

    /// multiply numerator and denominator so den becomes exactly `lcm`
    /// (which must contain this->den); returns the completed numerator
    MPoly num_over(const std::map<MPoly, int>& lcm) const;

    RatFunc eval(const std::vector<int>& values) const;

    std::string str(const std::vector<std::string>& names) const;

    static std::map<MPoly, int> lcm(const std::map<MPoly, int>& a,
                                    const std::map<MPoly, int>& b);

private:
    MPoly num_;
    std::map<MPoly, int> den_;
};

}  // namespace qholo
