#pragma once

/**
 * @file modsolve.hpp
 * @brief Homomorphic-image nullspace solver for large search systems.
 *
 * The recurrence searches (k-free operators, sequence guessing) produce
 * linear systems over Q(q) far too large for direct fraction-free
 * elimination.  This solver evaluates the system at u = alpha over a word
 * sized prime field, reads off rank and a normalized nullspace vector,
 * reconstructs each component as a rational function of u by Cauchy
 * interpolation, and lifts coefficients to Q by rational reconstruction
 * (CRT over two primes when one does not suffice).
 *
 * Rank conclusions in the "full column rank" direction are rigorous:
 * the rank of a homomorphic image never exceeds the true rank, so a full
 * rank image proves the nullspace is trivial.  Reconstructed solutions are
 * only candidates; every caller verifies them exactly before use.
 */

#include "qholo/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qholo {

struct ModSolveResult {
    bool rank_full = false;          ///< proven: only the zero solution exists
    std::optional<RatVec> candidate; ///< normalized nullspace vector (unverified)
};

/**
 * Find a nullspace vector of the Laurent-polynomial matrix `rows`
 * (rows.size() x ncols).  Deterministic for fixed input.
 * `max_component_degree` caps the reconstructed numerator/denominator
 * degree in u; reconstruction failure yields an empty candidate with
 * rank_full=false (caller decides how to escalate).
 */
ModSolveResult modular_nullspace(const PolyMat& rows, int ncols,
                                 int max_component_degree = 2048);

}  // namespace qholo
