#pragma once

/**
 * @file hyper.hpp
 * @brief Proper q-hypergeometric terms, exact multisums, and the summand
 * families (twist knots, figure-8, the introductory trefoil sum, and the
 * braid-derived summand F_w).
 *
 * A term is a product of atomic factors in the variables (n, k_1..k_r):
 * q-powers with quadratic exponent, sign factors, Pochhammer products with
 * monomial base/step and affine count, falling braces and q-binomials with
 * affine arguments.  Every exponent is stored in u-units (u = q^(1/4)).
 *
 * Pochhammer counts extend to negative integers via
 * (a;s)_{-m} = 1 / prod_{j=1..m} (1 - a s^{-j}); a vanishing factor in the
 * overall denominator makes the term evaluate to zero (out of support).
 */

#include "qholo/braid.hpp"
#include "qholo/mpoly.hpp"
#include "qholo/ratfunc.hpp"

#include <string>
#include <vector>

namespace qholo {

/// affine integer form c + sum k[i] * x_i over the term variables
struct AffForm {
    int c = 0;
    std::vector<int> k;

    explicit AffForm(int nvars = 0, int c0 = 0) : c(c0), k(nvars, 0) {}
    int eval(const std::vector<int>& x) const;
    int coeff(int var) const { return k[var]; }
};

/// integer quadratic form c + sum lin[i] x_i + sum_{i<=j} quad[i][j] x_i x_j
struct QuadForm {
    int c = 0;
    std::vector<int> lin;
    std::vector<std::vector<int>> quad;  ///< upper-triangular (i <= j)

    explicit QuadForm(int nvars = 0, int c0 = 0);
    explicit QuadForm(const AffForm& a);
    long eval(const std::vector<int>& x) const;
    /// Q(x + e_var) - Q(x), an affine form
    AffForm shift_delta(int var) const;
    QuadForm& operator+=(const QuadForm& o);
    /// product of two affine forms
    static QuadForm product(const AffForm& a, const AffForm& b);
};

class HyperTerm {
public:
    /// nvars = 1 + number of summation variables; variable 0 is n
    explicit HyperTerm(int nvars);
    HyperTerm(const HyperTerm&);
    HyperTerm(HyperTerm&&) noexcept;
    HyperTerm& operator=(const HyperTerm&);
    HyperTerm& operator=(HyperTerm&&) noexcept;
    ~HyperTerm();

    int nvars() const { return nvars_; }

    /// u^{Q(x)}
    void mul_qpow(const QuadForm& e, bool denom = false);
    /// (-1)^{a(x)}
    void mul_sign(const AffForm& a);
    /// prod_{i=0}^{count-1} (1 - u^{base} u^{step i}); base affine (u-units),
    /// step a nonzero u-exponent
    void mul_poch(const AffForm& base, int step, const AffForm& count,
                  bool denom = false);
    /// {N}_K
    void mul_bracefall(const AffForm& N, const AffForm& K, bool denom = false);
    /// qbinom(N, K)
    void mul_qbinom(const AffForm& N, const AffForm& K, bool denom = false);
    void mul_const(const Rational& c);

    /// exact value at a concrete point (n, k_1..k_r); a vanishing
    /// denominator factor yields 0 (out of support)
    RatFunc eval(const std::vector<int>& point) const;

    /// symbolic ratio t(..., x_var + 1, ...)/t(..., x_var, ...) over the
    /// MPoly variables (u, S_0..S_{nvars-1}) with S_i standing for u^{x_i}
    FactoredRat shift_ratio(int var) const;

    std::string str() const;

    /// structural data of the proper shape, for a priori order bounds:
    /// Pochhammer-type factor counts split by side, the max coefficient
    /// (q-granular, quadratic form included), and the refined per-factor
    /// sum of squared summation-variable count coefficients
    struct Shape {
        int num_factors = 0;
        int den_factors = 0;
        int max_coeff = 0;
        long refined = 0;
    };
    Shape shape() const;

private:
    struct Factor;
    int nvars_;
    Rational scalar_{1};
    std::vector<Factor> factors_;
};

/// sum of t over all (k_1..k_r) in N^r at the given n.  Support is found
/// by expanding the summation box until two consecutive outer layers
/// vanish; exceeding the cap (default 10 max(n,2)) is an error, never a
/// silent truncation.
RatFunc multisum(const HyperTerm& t, int n, int cap = -1);

/// named families: "twist:p" (cyclotomic function of the twist knot K_p),
/// "figure8-jones" (long-knot invariant of the figure-8), "trefoil-intro"
/// (0-framed right-hand trefoil single sum).  Throws on unknown name.
HyperTerm summand_family(const std::string& name);

/// summand of the broken quantum trace for a labeled braid diagram:
/// multisum over (k_1..k_c) equals broken_trace(b, n)
HyperTerm build_Fw(const CrossingLabels& labels, const BraidWord& b);

/// ad-hoc factor language: whitespace-separated product of
/// poch(base;step;count), qpow(quadratic), sign(affine), binom(a1,a2),
/// bracefall(a1,a2), each optionally prefixed by '/' for a denominator
/// factor.  Variables: n, k1..k<r>; exponents in u-units; base and step
/// are monomials q^e, v^e, u^e (e an affine expression) or an integer
/// power of q.
HyperTerm parse_term(const std::string& text, int num_summation_vars);

}  // namespace qholo
