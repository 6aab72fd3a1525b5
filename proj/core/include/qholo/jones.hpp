#pragma once

/**
 * @file jones.hpp
 * @brief R-matrix state sums: braiding operators, quantum traces, and the
 * colored Jones function of braid closures.
 *
 * V(n) has basis e_0..e_{n-1}.  The braiding B(n1,n2): V(n1)x V(n2) ->
 * V(n2) x V(n1) has entries built from the f_+/f_- building blocks; the
 * nonzero pattern is c - b = a - d.
 */

#include "qholo/braid.hpp"
#include "qholo/laurent.hpp"

#include <map>
#include <vector>

namespace qholo {

LaurentPoly f_plus(int n1, int n2, int a, int b, int k);
LaurentPoly f_minus(int n1, int n2, int a, int b, int k);

/// entry (B_sign)_{a,b}^{c,d}; zero unless c - b = a - d
LaurentPoly b_entry(int sign, int n1, int n2, int a, int b, int c, int d);

/// sparse element of V(n_1) x ... x V(n_m)
struct StateVector {
    std::map<std::vector<int>, LaurentPoly> entries;
};

/// apply B_sign at tensor slots (i, i+1), 1-based; swaps colors[i-1] and
/// colors[i].  Indices outside the color bounds are dropped.
StateVector apply_crossing(const StateVector& s, int i, int sign,
                           std::vector<int>& colors);

/// quantum trace of tau(beta) K^{-1}; colors are given per closure cycle
/// (cycles enumerated in order of their smallest bottom position).
LaurentPoly quantum_trace(const BraidWord& b, const std::vector<int>& cycle_colors);

/// broken quantum trace: strand at bottom position 1 is broken, its index
/// pinned to a_1 = 0 and its K^{-1} weight omitted.  Knot closures only.
LaurentPoly broken_trace(const BraidWord& b, int n);

enum class Normalization { framed, zero_framed, long_knot };

/// colored Jones function of the knot closure of b at color n.
/// framed: broken_trace * [n] (framing = writhe);
/// zero_framed: framing correction v^{w(n^2-1)/2} applied (see FRAMING_SIGN);
/// long_knot: zero-framed divided by [n] (exact).
/// mirror substitutes q -> 1/q in the result.
LaurentPoly jones(const BraidWord& b, int n, Normalization norm,
                  bool mirror = false);

/// jones over an inclusive range of colors, parallel over n
/// (thread count from QHOLO_THREADS, default hardware concurrency)
std::vector<LaurentPoly> jones_range(const BraidWord& b, int n_lo, int n_hi,
                                     Normalization norm, bool mirror = false);

}  // namespace qholo
