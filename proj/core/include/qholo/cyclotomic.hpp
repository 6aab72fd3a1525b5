#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Cyclotomic expansion of the colored Jones function:
 * J(n) = sum_{k=1}^n C(k) S(n,k) with the knot-independent kernel S, and
 * the inverse transform C(n) = sum_{k<=n} R(n,k) J(k).
 *
 * J here is always the zero-framed knot-normalized invariant
 * (J_unknot(n) = [n]).  C is indexed from 1; the twist-knot closed forms
 * c(p, .) are indexed from 0 and align as C(k) = c(p, k-1) (checked
 * against the defining identity by the tests).
 */

#include "qholo/laurent.hpp"
#include "qholo/ratfunc.hpp"

#include <map>
#include <string>

namespace qholo {

struct CycloSeq {
    std::map<int, RatFunc> values;  ///< k >= 1
    std::string provenance;         ///< "from-transform" | "from-closed-form"
};

/// C(n) = sum_{k=1}^n R(n,k) J(k) for 1 <= n <= N.  Requires J(k) for
/// all 1 <= k <= N; throws std::invalid_argument otherwise.
CycloSeq jones_to_cyclotomic(const std::map<int, LaurentPoly>& J, int N);

/// J(n) = sum_{k=1}^n C(k) S(n,k); requires C(k) for k <= n and a
/// polynomial result (always the case for genuine knot data)
LaurentPoly cyclotomic_to_jones(const CycloSeq& C, int n);

/// per-index membership in Z[q^{+-1}]
std::map<int, bool> integrality_check(const CycloSeq& C);

/// closed-form cyclotomic sequence of the twist knot K_p for k <= N,
/// via the single-sum formula (C(k) = c(p, k-1))
CycloSeq twist_cyclotomic(int p, int N);

}  // namespace qholo
