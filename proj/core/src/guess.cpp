#include "qholo/guess.hpp"

#include "qholo/modsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace qholo {

namespace {

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

std::optional<Recurrence> build_candidate(const PolyVec& x, int d, int D) {
    Recurrence rec;
    rec.order = d;
    rec.coeffs.assign(d + 1, CoeffPoly(2));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= D; ++j) {
            const LaurentPoly& c = x[i * (D + 1) + j];
            for (auto& [e, co] : c.terms())
                rec.coeffs[i] += MPoly::monomial(2, co, {e, j});
        }
    if (rec.coeffs[d].is_zero()) return std::nullopt;
    rec.provenance = "guessed";
    return rec;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(const Sequence& f, int max_order,
                                           int max_qdeg) {
    if (max_order < 1 || max_qdeg < 0)
        throw std::invalid_argument("guess_recurrence: bad schedule bounds");
    bool any_cell = false;
    for (int d = 1; d <= max_order; ++d) {
        // base points n with f(n)..f(n+d) all present
        std::vector<int> bases;
        for (auto& [n, v] : f) {
            bool ok = true;
            for (int i = 1; i <= d && ok; ++i) ok = f.count(n + i) > 0;
            if (ok) bases.push_back(n);
        }
        for (int D = 0; D <= max_qdeg; ++D) {
            const int unknowns = (d + 1) * (D + 1);
            if ((int)bases.size() < unknowns + 10) continue;  // cell lacks data
            any_cell = true;
            const int nfit = (int)bases.size() - 10;
            PolyMat rows;
            rows.reserve(nfit);
            for (int b = 0; b < nfit; ++b) {
                const int n = bases[b];
                LaurentPoly l = LaurentPoly::one();
                for (int i = 0; i <= d; ++i)
                    l = poly_lcm(l, f.at(n + i).den());
                PolyVec row(unknowns);
                for (int i = 0; i <= d; ++i) {
                    const RatFunc& v = f.at(n + i);
                    if (v.is_zero()) continue;
                    LaurentPoly base = v.num() * l.exact_div(v.den());
                    for (int j = 0; j <= D; ++j)
                        row[i * (D + 1) + j] =
                            base * LaurentPoly::q_power(j * n);
                }
                rows.push_back(std::move(row));
            }
            ModSolveResult ms = modular_nullspace(rows, unknowns);
            if (ms.rank_full) continue;
            auto accept = [&](const PolyVec& x) -> std::optional<Recurrence> {
                auto rec = build_candidate(x, d, D);
                if (!rec) return std::nullopt;
                if (!verify_recurrence(*rec, f, bases.front(), bases.back()))
                    return std::nullopt;
                return rec;
            };
            PolyVec cleared;
            if (ms.candidate && clear_denominators(*ms.candidate, cleared))
                if (auto rec = accept(cleared)) return rec;
            // modular candidate missing or unlucky: exact fallback when small
            if (nfit <= 200 && unknowns <= 48)
                for (auto& v : nullspace_poly(rows))
                    if (clear_denominators(v, cleared))
                        if (auto rec = accept(cleared)) return rec;
        }
    }
    if (!any_cell)
        throw std::runtime_error("guess_recurrence: insufficient data");
    return std::nullopt;
}

InitialBound initial_bound(const Recurrence& r) {
    if (!r.homogeneous())
        throw std::invalid_argument("initial_bound: homogeneous recurrences only");
    const CoeffPoly& cd = r.principal_symbol();
    if (cd.is_zero())
        throw std::invalid_argument("initial_bound: zero principal symbol");
    auto [ulo, uhi] = cd.var_range(0);
    const int degq = (uhi - ulo + 3) / 4;
    InitialBound out;
    out.bound = r.order + degq;
    // past n = degq distinct Q-powers can no longer cancel in u; scan the
    // finite prefix for actual zeros
    for (int n = 0; n <= degq; ++n)
        if (coeff_eval(cd, n).is_zero()) out.vanishing.push_back(n);
    return out;
}

}  // namespace qholo
