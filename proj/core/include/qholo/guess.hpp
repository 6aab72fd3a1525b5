#pragma once

/**
 * @file guess.hpp
 * @brief Recurrence guessing from exact sequence values, and initial
 * condition bounds from the principal symbol.
 *
 * guess_recurrence fits Σ_{i,j} c_{i,j} q^{jn} f(n+i) = 0 over a schedule
 * of (order, Q-degree) cells, smallest order first, then smallest degree.
 * The last ten usable base points are held out of the fit; a candidate is
 * returned only after exact verification on every available point.
 */

#include "qholo/weyl.hpp"

#include <optional>
#include <vector>

namespace qholo {

/// smallest (order, then Q-degree) homogeneous recurrence annihilating f,
/// within order <= max_order and Q-degree <= max_qdeg; std::nullopt when
/// the schedule is exhausted.  Throws std::runtime_error when no cell has
/// enough values to fit and verify.
std::optional<Recurrence> guess_recurrence(const Sequence& f, int max_order,
                                           int max_qdeg);

/// number of initial conditions determining a solution, plus the finite
/// set where the principal symbol vanishes
struct InitialBound {
    int bound = 0;              ///< order + structural q-degree of c_d
    std::vector<int> vanishing; ///< all n with c_d(q, q^n) = 0
};

/// bound = order + ceil(u-span(c_d)/4): past it the principal symbol
/// cannot vanish, so values are determined by earlier ones.  The vanishing
/// set is found by exact evaluation over the finite range.
InitialBound initial_bound(const Recurrence& r);

}  // namespace qholo
