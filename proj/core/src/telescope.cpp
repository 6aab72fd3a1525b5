#include "qholo/telescope.hpp"

#include "qholo/modsolve.hpp"

#include <array>
#include <stdexcept>

namespace qholo {

namespace {

MPoly lp_to_mpoly(const LaurentPoly& p, int nvars) {
    MPoly r(nvars);
    for (auto& [e, c] : p.terms()) {
        MPoly::Expo ex(nvars, 0);
        ex[0] = e;
        r += MPoly::monomial(nvars, c, ex);
    }
    return r;
}

// argument shift x_var -> x_var + amount on a factored ratio
FactoredRat shift_fr(const FactoredRat& f, int var, int amount) {
    if (amount == 0) return f;
    FactoredRat r(f.num().shift_symbol(var, amount));
    for (auto& [fac, m] : f.den_factors())
        for (int i = 0; i < m; ++i)
            r.mul_den_factor(fac.shift_symbol(var, amount));
    return r;
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    return a.exact_div(LaurentPoly::gcd(a, b)) * b;
}

// scale a rational vector to a primitive polynomial one; false when zero
bool clear_denominators(const RatVec& x, PolyVec& out) {
    LaurentPoly l = LaurentPoly::one();
    bool any = false;
    for (auto& c : x)
        if (!c.is_zero()) {
            any = true;
            l = poly_lcm(l, c.den());
        }
    if (!any) return false;
    out.assign(x.size(), LaurentPoly());
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out[i] = x[i].num() * l.exact_div(x[i].den());
    LaurentPoly g;
    for (auto& p : out)
        if (!p.is_zero()) g = g.is_zero() ? p : LaurentPoly::gcd(g, p);
    g = g.unit_normalized();
    for (auto& p : out)
        if (!p.is_zero()) p = p.exact_div(g);
    for (auto& p : out) {
        if (p.is_zero()) continue;
        Rational content = p.content();
        if (content != 1)
            for (auto& q : out) q = q.scaled(1 / content);
        if (p.leading_coeff() < 0)
            for (auto& q : out) q = -q;
        break;
    }
    return true;
}

using FactorMap = std::map<MPoly, int>;

FactoredRat over_factors(const MPoly& num, const FactorMap& den) {
    FactoredRat f(num);
    for (auto& [fac, m] : den)
        for (int i = 0; i < m; ++i) f.mul_den_factor(fac);
    return f;
}

}  // namespace

std::optional<Certificate> kfree_search(const HyperTerm& t, int order_n,
                                        int order_k, int qdeg,
                                        bool* proven_empty) {
    if (proven_empty) *proven_empty = false;
    if (t.nvars() != 2)
        throw std::invalid_argument("kfree_search: single sums only");
    if (order_n < 1 || order_k < 1 || qdeg < 0)
        throw std::invalid_argument("kfree_search: bad search cell");
    const int I = order_n, J = order_k, D = qdeg;
    FactoredRat rn = t.shift_ratio(0), rho = t.shift_ratio(1);

    // R_i = F(n+i,k)/F(n,k)
    std::vector<FactoredRat> R{FactoredRat(MPoly(3, Rational(1)))};
    for (int i = 1; i <= I; ++i) {
        FactoredRat cur = R.back();
        cur.mul(shift_fr(rn, 1, i - 1));
        R.push_back(cur);
    }
    // certificate denominator: ratio denominators over a window of k-shifts
    FactorMap den_r;
    for (auto& ri : R) den_r = FactoredRat::lcm(den_r, ri.den_factors());
    for (int s = -(J - 1); s <= J - 1; ++s)
        den_r = FactoredRat::lcm(den_r, shift_fr(rho, 2, s).den_factors());

    // r(k+1) = nu * w1 / den1 with nu a monomial from factor normalization
    FactoredRat den1_fr = shift_fr(over_factors(MPoly(3, Rational(1)), den_r),
                                   2, 1);
    // E_k-shifted certificate times the k-ratio, without the unknown w
    FactoredRat term1(den1_fr.num() * rho.num());
    for (auto& [fac, m] : den1_fr.den_factors())
        for (int i = 0; i < m; ++i) term1.mul_den_factor(fac);
    for (auto& [fac, m] : rho.den_factors())
        for (int i = 0; i < m; ++i) term1.mul_den_factor(fac);

    FactorMap L = den_r;
    L = FactoredRat::lcm(L, term1.den_factors());
    for (auto& ri : R) L = FactoredRat::lcm(L, ri.den_factors());

    MPoly C1 = term1.num_over(L);
    MPoly C2 = over_factors(MPoly(3, Rational(1)), den_r).num_over(L);

    // columns: sigma block (i, d), then w block over a (Q, Q_k) rectangle
    std::vector<MPoly> cols;
    std::vector<std::array<int, 3>> meta;  // {0,i,d} sigma / {1,a,b} w
    for (int i = 0; i <= I; ++i) {
        MPoly N = R[i].num_over(L);
        for (int d = 0; d <= D; ++d) {
            cols.push_back(d == 0 ? N : N * MPoly::monomial(3, 1, {0, 4 * d, 0}));
            meta.push_back({0, i, d});
        }
    }
    // the certificate numerator must cover den_r up to the margin allowed
    // by the cell: its monomial rectangle tracks the span of the collected
    // denominator, widened by the degree and window parameters
    int a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
    {
        MPoly den_prod(3, Rational(1));
        for (auto& [fac, m] : den_r)
            for (int i = 0; i < m; ++i) den_prod *= fac;
        auto ra = den_prod.var_range(1);
        auto rb = den_prod.var_range(2);
        a_lo = ra.first - 4 * (D + 1);
        a_hi = ra.second + 4 * (D + 1);
        b_lo = rb.first - 4 * (J + 1);
        b_hi = rb.second + 4 * (J + 1);
    }
    for (int a = a_lo; a <= a_hi; a += 2)
        for (int b = b_lo; b <= b_hi; b += 2) {
            MPoly col = MPoly::monomial(3, 1, {b, a, b}) * C1 -
                        MPoly::monomial(3, 1, {0, a, b}) * C2;
            if (col.is_zero()) continue;
            cols.push_back(col);
            meta.push_back({1, a, b});
        }
    const int ncols = (int)cols.size();

    // coefficients of each (S_n, S_k) monomial must cancel
    std::map<MPoly::Expo, PolyVec> rowmap;
    for (int c = 0; c < ncols; ++c)
        for (auto& [e, lp] : cols[c].coeff_map())
            rowmap.try_emplace(e, PolyVec(ncols)).first->second[c] = lp;
    PolyMat rows;
    rows.reserve(rowmap.size());
    for (auto& [e, row] : rowmap) rows.push_back(row);

    auto build = [&](const PolyVec& x) -> std::optional<Certificate> {
        MPoly total(3);
        for (int c = 0; c < ncols; ++c)
            if (!x[c].is_zero()) total += lp_to_mpoly(x[c], 3) * cols[c];
        if (!total.is_zero()) return std::nullopt;  // candidate was spurious
        std::vector<MPoly> sigma(I + 1, MPoly(2));
        MPoly w(3);
        for (int c = 0; c < ncols; ++c) {
            if (x[c].is_zero()) continue;
            if (meta[c][0] == 0) {
                for (auto& [e, co] : x[c].terms())
                    sigma[meta[c][1]] += MPoly::monomial(2, co, {e, meta[c][2]});
            } else {
                w += lp_to_mpoly(x[c], 3) *
                     MPoly::monomial(3, 1, {0, meta[c][1], meta[c][2]});
            }
        }
        Certificate cert;
        cert.P = WeylOperator(1);
        for (int i = 0; i <= I; ++i)
            if (!sigma[i].is_zero()) cert.P.add_term({i}, sigma[i]);
        if (cert.P.is_zero()) return std::nullopt;
        cert.r = over_factors(w, den_r);
        return cert;
    };

    ModSolveResult ms = modular_nullspace(rows, ncols);
    if (ms.rank_full) {
        if (proven_empty) *proven_empty = true;
        return std::nullopt;
    }
    PolyVec cleared;
    if (ms.candidate && clear_denominators(*ms.candidate, cleared))
        if (auto cert = build(cleared)) return cert;
    // modular candidate missing or unlucky: exact elimination when feasible
    if ((long)rows.size() <= 300 && ncols <= 60)
        for (auto& v : nullspace_poly(rows))
            if (clear_denominators(v, cleared))
                if (auto cert = build(cleared)) return cert;
    return std::nullopt;
}

Recurrence telescope(const HyperTerm& t, const Certificate& cert) {
    if (cert.P.npairs() != 1)
        throw std::invalid_argument("telescope: principal part must act on n");
    int order = -1;
    for (auto& [e, c] : cert.P.terms())
        if (!c.is_zero()) order = std::max(order, e[0]);
    if (order < 0)
        throw std::domain_error("telescope: certificate has zero principal part");
    Recurrence rec;
    rec.order = order;
    rec.coeffs.assign(order + 1, CoeffPoly(2));
    for (auto& [e, c] : cert.P.terms()) rec.coeffs[e[0]] = c;
    rec.provenance = "telescoped";
    // boundary value: P G(n) = (r F)(n, 0); drop the right side when the
    // certificate numerator vanishes identically at k = 0
    MPoly w_at_0(3);
    for (auto& [e, co] : cert.r.num().terms())
        w_at_0 += MPoly::monomial(3, co, {e[0], e[1], 0});
    if (!w_at_0.is_zero()) {
        FactoredRat r = cert.r;
        HyperTerm term = t;
        rec.rhs = [r, term](int n) -> RatFunc {
            RatFunc f0 = term.eval({n, 0});
            if (f0.is_zero()) return RatFunc::zero();
            return r.eval({n, 0}) * f0;
        };
    }
    return rec;
}

OrderBound order_bound(const HyperTerm& t) {
    HyperTerm::Shape s = t.shape();
    const int r = t.nvars() - 1;
    long S = std::max(s.num_factors, 1), T = std::max(s.den_factors, 1);
    long B = std::max(s.max_coeff, 1);
    long cell = 4 * S * T * B * B;
    long global = 1, fact = 1;
    for (int i = 1; i <= r; ++i) {
        global *= cell;
        fact *= i;
    }
    return {global / fact, s.refined};
}

Recurrence homogenize(const Recurrence& r, const Recurrence& rhs_rule) {
    if (!rhs_rule.homogeneous() || rhs_rule.order != 1)
        throw std::invalid_argument(
            "homogenize: need an order-1 homogeneous rule for the right side");
    WeylOperator B(1), C(1);
    B.add_term({0}, rhs_rule.coeffs[0]);
    B.add_term({1}, rhs_rule.coeffs[1]);
    for (int i = 0; i <= r.order; ++i) C.add_term({i}, r.coeffs[i]);
    WeylOperator prod = B * C;
    Recurrence out;
    out.order = r.order + 1;
    out.coeffs.assign(out.order + 1, CoeffPoly(2));
    for (auto& [e, c] : prod.terms()) out.coeffs[e[0]] = c;
    if (out.coeffs.back().is_zero())
        throw std::domain_error("homogenize: degenerate product");
    out.provenance = "telescoped";
    return out;
}

std::optional<TelescopeResult> telescope_search(const HyperTerm& t,
                                                int max_order, int max_degree,
                                                int verify_lo, int verify_hi) {
    Sequence G;
    for (int n = verify_lo; n <= verify_hi + max_order; ++n)
        G[n] = multisum(t, n);
    for (int I = 1; I <= max_order; ++I)
        for (int J = 1; J <= I + 1; ++J)
            for (int D = 0; D <= max_degree; ++D) {
                auto cert = kfree_search(t, I, J, D);
                if (!cert) continue;
                Recurrence rec;
                try {
                    rec = telescope(t, *cert);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (verify_recurrence(rec, G, verify_lo, verify_hi))
                    return TelescopeResult{rec, *cert, I, J, D};
            }
    return std::nullopt;
}

}  // namespace qholo
