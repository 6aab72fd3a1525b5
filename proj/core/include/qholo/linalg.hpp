#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over Q(q^(1/4)).
 *
 * Fraction-free (Bareiss) elimination on Laurent-polynomial matrices with a
 * final content-normalization pass; solutions and nullspace bases come back
 * over the fraction field and satisfy the system exactly.
 */

#include "qholo/ratfunc.hpp"

#include <optional>
#include <vector>

namespace qholo {

using RatVec = std::vector<RatFunc>;
using RatMat = std::vector<RatVec>;
using PolyVec = std::vector<LaurentPoly>;
using PolyMat = std::vector<PolyVec>;

struct LinearSolution {
    bool consistent = true;          ///< false iff rhs is outside the column space
    std::optional<RatVec> particular;///< one solution, when consistent
    std::vector<RatVec> nullspace;   ///< basis of the homogeneous solution space
    int rank = 0;
};

/// Solve M x = rhs exactly.  An empty solution space is a valid result,
/// not an error: consistent=false reports it.
LinearSolution solve_linear(const RatMat& M, const RatVec& rhs);

/// Nullspace basis of M (homogeneous case), exact.
std::vector<RatVec> nullspace(const RatMat& M);

/// Nullspace of a Laurent-polynomial matrix via Bareiss elimination.
std::vector<RatVec> nullspace_poly(const PolyMat& M);

/// Exact matrix-vector product.
RatVec mat_vec(const RatMat& M, const RatVec& x);

}  // namespace qholo
