#include "qholo/linalg.hpp"

#include <stdexcept>

namespace qholo {

namespace {

// divide a row by its rational content and common u-power
void reduce_row(PolyVec& row) {
    Rational content(0);
    int min_e = 0;
    bool any = false;
    for (auto& p : row) {
        if (p.is_zero()) continue;
        Rational c = p.content();
        if (!any) {
            content = c;
            min_e = p.min_exp();
            any = true;
        } else {
            // gcd of rationals: gcd of numerators / lcm of denominators
            mpz_class gn, dl;
            mpz_gcd(gn.get_mpz_t(), content.get_num().get_mpz_t(),
                    c.get_num().get_mpz_t());
            mpz_lcm(dl.get_mpz_t(), content.get_den().get_mpz_t(),
                    c.get_den().get_mpz_t());
            content = Rational(gn, dl);
            content.canonicalize();
            min_e = std::min(min_e, p.min_exp());
        }
    }
    if (!any) return;
    for (auto& p : row) {
        if (p.is_zero()) continue;
        p = p.scaled(1 / content).shifted(-min_e);
    }
}

struct Echelon {
    PolyMat rows;               // echelon rows (augmented width)
    std::vector<int> pivot_col; // pivot column per echelon row
};

// fraction-free elimination with per-row content removal; operates on the
// full (possibly augmented) width, pivots restricted to the first ncols cols
Echelon echelon_form(PolyMat M, int ncols) {
    Echelon e;
    size_t r = 0;
    for (int j = 0; j < ncols && r < M.size(); ++j) {
        size_t piv = r;
        while (piv < M.size() && M[piv][j].is_zero()) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        for (size_t i = r + 1; i < M.size(); ++i) {
            if (M[i][j].is_zero()) continue;
            LaurentPoly a = M[r][j], b = M[i][j];
            for (size_t jj = 0; jj < M[i].size(); ++jj)
                M[i][jj] = a * M[i][jj] - b * M[r][jj];
            reduce_row(M[i]);
        }
        e.pivot_col.push_back(j);
        ++r;
    }
    // surviving nonzero rows beyond rank live only in the augmented part
    M.resize(M.size());
    e.rows.assign(M.begin(), M.end());
    return e;
}

}  // namespace

RatVec mat_vec(const RatMat& M, const RatVec& x) {
    RatVec y(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
        RatFunc acc;
        for (size_t j = 0; j < x.size(); ++j) acc += M[i][j] * x[j];
        y[i] = acc;
    }
    return y;
}

namespace {

LinearSolution solve_from_poly(const PolyMat& A, int ncols, bool has_rhs) {
    LinearSolution out;
    Echelon e = echelon_form(A, ncols);
    int rank = static_cast<int>(e.pivot_col.size());
    out.rank = rank;

    // reduced form over the fraction field (small by now)
    RatMat R(rank);
    for (int i = 0; i < rank; ++i) {
        R[i].resize(e.rows[i].size());
        for (size_t j = 0; j < e.rows[i].size(); ++j) R[i][j] = RatFunc(e.rows[i][j]);
    }
    for (int i = rank - 1; i >= 0; --i) {
        RatFunc inv = R[i][e.pivot_col[i]].inv();
        for (auto& x : R[i]) x *= inv;
        for (int k = 0; k < i; ++k) {
            RatFunc f = R[k][e.pivot_col[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < R[k].size(); ++j) R[k][j] -= f * R[i][j];
        }
    }

    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;

    if (has_rhs) {
        // consistency: any zero-row of the coefficient part with nonzero rhs
        out.consistent = true;
        for (size_t i = rank; i < e.rows.size(); ++i) {
            bool coeff_zero = true;
            for (int j = 0; j < ncols; ++j)
                if (!e.rows[i][j].is_zero()) { coeff_zero = false; break; }
            if (coeff_zero && !e.rows[i][ncols].is_zero()) {
                out.consistent = false;
                break;
            }
        }
        if (out.consistent) {
            RatVec x(ncols, RatFunc::zero());
            for (int i = 0; i < rank; ++i) x[e.pivot_col[i]] = R[i][ncols];
            out.particular = x;
        }
    }

    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(ncols, RatFunc::zero());
        v[f] = RatFunc::one();
        for (int i = 0; i < rank; ++i) v[e.pivot_col[i]] = -R[i][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

PolyMat clear_rows(const RatMat& M, const RatVec* rhs) {
    PolyMat A(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
        LaurentPoly lcm = LaurentPoly::one();
        auto fold = [&lcm](const RatFunc& x) {
            if (x.den().is_one()) return;
            LaurentPoly g = LaurentPoly::gcd(lcm, x.den());
            lcm = lcm * x.den().shifted(-x.den().min_exp()).exact_div(g);
        };
        for (auto& x : M[i]) fold(x);
        if (rhs) fold((*rhs)[i]);
        auto cleared = [&lcm](const RatFunc& x) {
            return (RatFunc(lcm) * x).as_poly();
        };
        A[i].reserve(M[i].size() + (rhs ? 1 : 0));
        for (auto& x : M[i]) A[i].push_back(cleared(x));
        if (rhs) A[i].push_back(cleared((*rhs)[i]));
        reduce_row(A[i]);
    }
    return A;
}

}  // namespace

LinearSolution solve_linear(const RatMat& M, const RatVec& rhs) {
    if (M.empty()) {
        LinearSolution s;
        s.particular = RatVec{};
        return s;
    }
    if (M.size() != rhs.size())
        throw std::invalid_argument("solve_linear: shape mismatch");
    int ncols = static_cast<int>(M[0].size());
    return solve_from_poly(clear_rows(M, &rhs), ncols, true);
}

std::vector<RatVec> nullspace(const RatMat& M) {
    if (M.empty()) return {};
    int ncols = static_cast<int>(M[0].size());
    return solve_from_poly(clear_rows(M, nullptr), ncols, false).nullspace;
}

std::vector<RatVec> nullspace_poly(const PolyMat& M) {
    if (M.empty()) return {};
    int ncols = static_cast<int>(M[0].size());
    return solve_from_poly(M, ncols, false).nullspace;
}

}  // namespace qholo
