#pragma once

/**
 * @file weyl.hpp
 * @brief q-Weyl operator algebra (EQ = qQE), recurrences, and exact
 * verification against sequences.
 *
 * An operator is a normal-form sum coeff(q, Q_0..Q_{m-1}) E_0^{b_0}..E^{b},
 * all multiplication operators left of all shifts.  Coefficients are MPoly
 * over (u, Q_0, .., Q_{m-1}) where the symbol Q_i stands for q^{x_i}
 * (q-granular: symbol exponent j means q^{j x_i}, so evaluation at x_i = n
 * is MPoly::substitute with value 4n).
 */

#include "qholo/mpoly.hpp"
#include "qholo/ratfunc.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qholo {

/// coefficient polynomial in (q, Q): MPoly over (u, Q) with Q = q^n
using CoeffPoly = MPoly;

/// c * q^{e_q4/4} * Q^j as a CoeffPoly (e_q4 counted in u-units)
CoeffPoly coeff_mono(const Rational& c, int e_u, int j);

/// substitute Q -> q^n
LaurentPoly coeff_eval(const CoeffPoly& c, int n);

/// render in the operator text style: "1 + q - Q + Q^2", quarter q-powers
/// as q^(k/4)
std::string coeff_str(const CoeffPoly& c);

/// inverse of coeff_str; throws std::invalid_argument on malformed input
CoeffPoly coeff_parse(const std::string& text);

/// discrete function values on a contiguous range
using Sequence = std::map<int, RatFunc>;

class WeylOperator {
public:
    /// npairs = number of (Q_i, E_i) generator pairs; pair 0 is (Q, E)
    explicit WeylOperator(int npairs = 1) : npairs_(npairs) {}

    int npairs() const { return npairs_; }
    /// E-exponent vector -> coefficient in (u, Q_0..Q_{m-1})
    const std::map<std::vector<int>, MPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static WeylOperator zero(int npairs = 1) { return WeylOperator(npairs); }
    static WeylOperator one(int npairs = 1);
    /// generators E_var and Q_var
    static WeylOperator E(int npairs = 1, int var = 0);
    static WeylOperator Q(int npairs = 1, int var = 0);
    static WeylOperator constant(const MPoly& coeff, int npairs = 1);

    void add_term(const std::vector<int>& epow, const MPoly& coeff);

    WeylOperator operator+(const WeylOperator& o) const;
    WeylOperator operator-(const WeylOperator& o) const;
    /// normal-ordered product using E_i Q_i = q Q_i E_i exactly
    WeylOperator operator*(const WeylOperator& o) const;
    WeylOperator& operator+=(const WeylOperator& o) { *this = *this + o; return *this; }
    WeylOperator& operator*=(const WeylOperator& o) { *this = *this * o; return *this; }

    bool operator==(const WeylOperator& o) const {
        return npairs_ == o.npairs_ && terms_ == o.terms_;
    }

    /// action on a one-variable sequence at n (npairs == 1):
    /// (Q^a E^b f)(n) = q^{na} f(n+b).  Throws when f lacks a needed value.
    RatFunc apply(const Sequence& f, int n) const;

    /// one-variable rendering, e.g. "(q^2 - Q) E^2 + (1 + q - Q + Q^2) E + q Q^3"
    std::string str() const;

private:
    int npairs_;
    std::map<std::vector<int>, MPoly> terms_;  ///< no zero coeffs stored
};

struct Recurrence {
    int order = 0;
    std::vector<CoeffPoly> coeffs;        ///< c_0..c_order, c_order != 0
    std::function<RatFunc(int)> rhs;      ///< empty: homogeneous (== 0)
    std::string provenance;               ///< guessed | telescoped | paper-input

    bool homogeneous() const { return !rhs; }
    /// sum_i c_i(q, q^n) f(n+i)
    RatFunc apply(const Sequence& f, int n) const;
    /// the order-d E-coefficient c_order
    const CoeffPoly& principal_symbol() const { return coeffs.back(); }
    std::string str() const;
};

/// exact check of sum_i c_i(n) f(n+i) == rhs(n) for every n in [n_lo, n_hi]
bool verify_recurrence(const Recurrence& r, const Sequence& f, int n_lo, int n_hi);

}  // namespace qholo
