#pragma once

/**
 * @file qspecial.hpp
 * @brief Quantum integers, factorials, binomials and the cyclotomic kernels.
 *
 * Conventions: {n} = v^n - v^(-n), [n] = {n}/{1}, {n}_k is the falling
 * product of k braces (0 when k < 0), qbinom(n,k) = {n}_k/{k}_k.
 */

#include "qholo/ratfunc.hpp"

namespace qholo::qspecial {

LaurentPoly brace(int n);       ///< v^n - v^(-n)
LaurentPoly qint(int n);        ///< [n] = {n}/{1}
LaurentPoly qfact(int n);       ///< [n]!; requires n >= 0
LaurentPoly brace_fact(int n);  ///< {n}!; requires n >= 0

/// {n}_k = {n}{n-1}...{n-k+1}; empty product 1 for k = 0, zero for k < 0
LaurentPoly brace_falling(int n, int k);

/// {n}_k / {k}_k; zero for k < 0; throws if the division is not exact
LaurentPoly qbinom(int n, int k);

/// prod_{i=0}^{count-1} (1 - base * step^i); requires count >= 0.
/// The explicit step covers (x;q)_k, (x;q^(-1))_k and v-power variants alike.
LaurentPoly pochhammer(const LaurentPoly& base, const LaurentPoly& step, int count);

/// S(n,k) = {n+k-1}_{2k-1} / {1}; requires n,k >= 1.  S(n,1) = [n].
LaurentPoly cyc_S(int n, int k);

/// R(n,k) = (-1)^(n-k) {2k} / ({2n-1}! [2n]) * qbinom(2n, n-k); requires
/// n >= 1.  Zero for k > n.  Inverse kernel of S: sum_k R(n,k) S(k,j) is
/// the Kronecker delta.
RatFunc cyc_R(int n, int k);

}  // namespace qholo::qspecial
