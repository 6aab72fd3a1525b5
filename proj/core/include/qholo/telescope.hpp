#pragma once

/**
 * @file telescope.hpp
 * @brief Creative telescoping for single sums: certificate search with a
 * k-free principal part, certificate decomposition, and a priori order
 * bounds.
 *
 * For G(n) = sum_k F(n,k) with F a proper term in (n,k), an annihilating
 * operator of the certificate form
 *
 *     A = P(E,Q) + (E_k - 1) R,   P = sum_i sigma_i(Q) E^i,
 *
 * with R the multiplication operator by a rational function r(Q, Q_k),
 * telescopes on summation over k: P G(n) equals the boundary value of
 * (r F) at k = 0.  The principal part P must be free of the summation
 * variable; the certificate r need not be, and in general cannot be:
 * fully k-free annihilating operators do not exist even for a plain
 * q-binomial summand (the leading q-exponent of F(n+i, k+j) carries an
 * n k cross term that distinct shifts can never cancel), so the search
 * ansatz carries the (E_k - 1) R part explicitly.
 */

#include "qholo/hyper.hpp"
#include "qholo/weyl.hpp"

#include <optional>

namespace qholo {

/// annihilating operator P + (E_k - 1) R for a summand: P is the k-free
/// principal part, r the rational certificate over (u, S_n, S_k)
struct Certificate {
    WeylOperator P{1};
    FactoredRat r;
};

/// search for a certificate with E-order <= order_n, sigma_i(Q) of
/// Q-degree <= qdeg, and r = w / den where den collects the denominator
/// factors of the summand's shift ratios over a window of k-shifts of
/// half-width order_k - 1, and w ranges over a rectangle of (Q, Q_k)
/// monomials covering the span of den widened by margins proportional to
/// qdeg and order_k.  Exhaustive for the cell; when the linear system has
/// full column rank the result is a proof that no certificate of this
/// shape exists there (reported through proven_empty).
std::optional<Certificate> kfree_search(const HyperTerm& t, int order_n,
                                        int order_k, int qdeg,
                                        bool* proven_empty = nullptr);

/// certificate decomposition: recurrence P G(n) = (r F)(n, 0), possibly
/// inhomogeneous; the right side is dropped when the certificate
/// numerator vanishes identically at k = 0.  Throws std::domain_error
/// when P is zero.
Recurrence telescope(const HyperTerm& t, const Certificate& cert);

/// a priori order bounds for the recurrence of the sum:
/// global = (4 S T B^2)^r / r!, refined = per-factor squared-count sum
struct OrderBound {
    long global = 0;
    long refined = 0;
};
OrderBound order_bound(const HyperTerm& t);

/// given P G = h and an order-1 homogeneous rule for h, left-multiply to
/// obtain a homogeneous recurrence of order r.order + 1
Recurrence homogenize(const Recurrence& r, const Recurrence& rhs_rule);

struct TelescopeResult {
    Recurrence rec;
    Certificate cert;
    int order_n = 0, order_k = 0, qdeg = 0;  ///< the successful search cell
};

/// schedule: order I = 1..max_order, window J = 1..I+1, degree
/// D = 0..max_degree; first cell whose telescoped recurrence verifies
/// against multisum values on [verify_lo, verify_hi] wins
std::optional<TelescopeResult> telescope_search(const HyperTerm& t,
                                                int max_order, int max_degree,
                                                int verify_lo, int verify_hi);

}  // namespace qholo
