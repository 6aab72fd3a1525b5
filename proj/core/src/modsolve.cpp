#include "qholo/modsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace qholo {

namespace {

struct Fp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p || s < a ? s - p : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
    uint64_t from_mpz(const mpz_class& z) const {
        mpz_class m = z % p;
        if (m < 0) m += p;
        return m.get_ui();
    }
    uint64_t from_rational(const Rational& r) const {
        uint64_t n = from_mpz(r.get_num()), d = from_mpz(r.get_den());
        if (d == 0) throw std::domain_error("modsolve: denominator vanishes mod p");
        return mul(n, inv(d));
    }
};

// primes below 2^64 / 2^63; products comfortably cover coefficient lifting
constexpr uint64_t kPrime1 = 18446744073709551557ULL;
constexpr uint64_t kPrime2 = 9223372036854775783ULL;

uint64_t eval_mod(const LaurentPoly& poly, uint64_t alpha, const Fp& fp) {
    if (poly.is_zero()) return 0;
    // Horner over the sorted exponents: gaps are usually small, so stepping
    // by exponent differences beats an independent power per term
    uint64_t acc = 0;
    int prev_e = 0;
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        auto& [e, c] = *it;
        if (!first) acc = fp.mul(acc, fp.pow(alpha, static_cast<uint64_t>(prev_e - e)));
        acc = fp.add(acc, fp.from_rational(c));
        prev_e = e;
        first = false;
    }
    int low = prev_e;
    if (low > 0) acc = fp.mul(acc, fp.pow(alpha, static_cast<uint64_t>(low)));
    if (low < 0) acc = fp.mul(acc, fp.pow(fp.inv(alpha), static_cast<uint64_t>(-low)));
    return acc;
}

using VecP = std::vector<uint64_t>;
using MatP = std::vector<VecP>;

// RREF in place; returns pivot columns
std::vector<int> rref(MatP& M, int ncols, const Fp& fp) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int j = 0; j < ncols && r < M.size(); ++j) {
        size_t piv = r;
        while (piv < M.size() && M[piv][j] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        uint64_t inv = fp.inv(M[r][j]);
        for (auto& x : M[r]) x = fp.mul(x, inv);
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][j] == 0) continue;
            uint64_t f = M[i][j];
            for (size_t jj = 0; jj < M[i].size(); ++jj)
                M[i][jj] = fp.sub(M[i][jj], fp.mul(f, M[r][jj]));
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

// dense polynomial helpers mod p (c[0] = constant term)
VecP poly_trim(VecP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}
int poly_deg(const VecP& a) { return static_cast<int>(a.size()) - 1; }
VecP poly_mul(const VecP& a, const VecP& b, const Fp& fp) {
    if (a.empty() || b.empty()) return {};
    VecP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
    }
    return r;
}
VecP poly_sub(VecP a, const VecP& b, const Fp& fp) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = fp.sub(a[i], b[i]);
    return poly_trim(std::move(a));
}
// a = q*b + r
void poly_divmod(const VecP& a, const VecP& b, VecP& q, VecP& r, const Fp& fp) {
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    uint64_t inv_lead = fp.inv(b.back());
    while (poly_deg(r) >= poly_deg(b) && !r.empty()) {
        int shift = poly_deg(r) - poly_deg(b);
        uint64_t c = fp.mul(r.back(), inv_lead);
        q[shift] = fp.add(q[shift], c);
        for (size_t i = 0; i < b.size(); ++i)
            r[i + shift] = fp.sub(r[i + shift], fp.mul(c, b[i]));
        r = poly_trim(std::move(r));
    }
    q = poly_trim(std::move(q));
}
uint64_t poly_eval(const VecP& a, uint64_t x, const Fp& fp) {
    uint64_t acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = fp.add(fp.mul(acc, x), a[i]);
    return acc;
}

// Newton interpolation through (xs[i], ys[i])
VecP interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys,
                 const Fp& fp) {
    size_t n = xs.size();
    std::vector<uint64_t> dd = ys;  // divided differences, built in place
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            uint64_t denom = fp.sub(xs[i], xs[i - level]);
            dd[i] = fp.mul(fp.sub(dd[i], dd[i - 1]), fp.inv(denom));
            if (i == level) break;
        }
    }
    VecP poly{dd[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // poly = poly*(u - xs[i]) + dd[i]
        VecP shifted(poly.size() + 1, 0);
        for (size_t j = 0; j < poly.size(); ++j) {
            shifted[j + 1] = fp.add(shifted[j + 1], poly[j]);
            shifted[j] = fp.sub(shifted[j], fp.mul(poly[j], xs[i]));
        }
        shifted[0] = fp.add(shifted[0], dd[i]);
        poly = poly_trim(std::move(shifted));
    }
    return poly;
}

// Cauchy rational interpolation: N/D fitting all sample points, with
// deg N + deg D < xs.size().  Returns false on breakdown.
bool rational_interpolate(const std::vector<uint64_t>& xs,
                          const std::vector<uint64_t>& ys, const Fp& fp,
                          VecP& N, VecP& D) {
    if (std::all_of(ys.begin(), ys.end(), [](uint64_t y) { return y == 0; })) {
        N = {};
        D = {1};
        return true;
    }
    VecP m0{1};
    for (uint64_t x : xs) {
        VecP lin{fp.sub(0, x), 1};
        m0 = poly_mul(m0, lin, fp);
    }
    VecP m1 = interpolate(xs, ys, fp);
    int half = static_cast<int>(xs.size()) / 2;
    // extended Euclid: r = s*m0 + t*m1; stop when deg(r) <= half
    VecP r0 = m0, r1 = m1;
    VecP t0{}, t1{1};
    while (!r1.empty() && poly_deg(r0) > half) {
        VecP q, rem;
        poly_divmod(r0, r1, q, rem, fp);
        VecP t2 = poly_sub(t0, poly_mul(q, t1, fp), fp);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if (r0.empty() && t0.empty()) return false;
    N = r0;
    D = t0;
    if (D.empty()) return false;
    // validate at the sample points (also rejects poles at samples)
    for (size_t i = 0; i < xs.size(); ++i) {
        uint64_t dv = poly_eval(D, xs[i], fp);
        if (dv == 0) return false;
        if (fp.mul(ys[i], dv) != poly_eval(N, xs[i], fp)) return false;
    }
    // normalize D monic
    uint64_t inv = fp.inv(D.back());
    for (auto& c : N) c = fp.mul(c, inv);
    for (auto& c : D) c = fp.mul(c, inv);
    return true;
}

// Wang rational reconstruction of z mod m with |num|,|den| <= sqrt(m/2)
bool rat_recon(const mpz_class& z, const mpz_class& m, Rational& out) {
    mpz_class r0 = m, r1 = z % m;
    if (r1 < 0) r1 += m;
    mpz_class s0 = 0, s1 = 1;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1 && g != -1) {
        // common factor means the image was not a reduced fraction; reject
        if (r1 % g != 0 || s1 % g != 0) return false;
        r1 /= g;
        s1 /= g;
    }
    if (s1 < 0) { r1 = -r1; s1 = -s1; }
    out = Rational(r1, s1);
    out.canonicalize();
    return true;
}

struct PrimeImages {
    // per component: numerator and denominator coefficients mod p
    std::vector<VecP> nums, dens;
    bool ok = false;
};

// coefficients pre-reduced mod p, exponents ascending
using RedPoly = std::vector<std::pair<int, uint64_t>>;

RedPoly reduce_poly(const LaurentPoly& poly, const Fp& fp) {
    RedPoly r;
    r.reserve(poly.terms().size());
    for (auto& [e, c] : poly.terms()) r.emplace_back(e, fp.from_rational(c));
    return r;
}

uint64_t eval_red(const RedPoly& poly, uint64_t alpha, const Fp& fp) {
    if (poly.empty()) return 0;
    uint64_t acc = 0;
    int prev_e = 0;
    bool first = true;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        if (!first) acc = fp.mul(acc, fp.pow(alpha, static_cast<uint64_t>(prev_e - it->first)));
        acc = fp.add(acc, it->second);
        prev_e = it->first;
        first = false;
    }
    if (prev_e > 0) acc = fp.mul(acc, fp.pow(alpha, static_cast<uint64_t>(prev_e)));
    if (prev_e < 0) acc = fp.mul(acc, fp.pow(fp.inv(alpha), static_cast<uint64_t>(-prev_e)));
    return acc;
}

// sample, solve and interpolate all non-free components for one prime
PrimeImages images_for_prime(const PolyMat& rows, uint64_t prime,
                             const std::vector<int>& pivots, int free_col,
                             int npoints) {
    Fp fp{prime};
    PrimeImages out;
    int r = static_cast<int>(pivots.size());
    std::vector<std::vector<RedPoly>> red(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        red[i].reserve(r + 1);
        for (int j = 0; j < r; ++j) red[i].push_back(reduce_poly(rows[i][pivots[j]], fp));
        red[i].push_back(reduce_poly(rows[i][free_col], fp));
    }
    std::vector<uint64_t> xs;
    std::vector<std::vector<uint64_t>> comp_vals(r);  // values of pivot comps
    uint64_t alpha = 2;
    int misses = 0;
    while (static_cast<int>(xs.size()) < npoints && misses < 4 * npoints + 64) {
        ++alpha;
        // solve rows[:, pivots] * x = -rows[:, free_col] at u = alpha
        MatP M(rows.size(), VecP(r + 1));
        for (size_t i = 0; i < rows.size(); ++i) {
            for (int j = 0; j < r; ++j) M[i][j] = eval_red(red[i][j], alpha, fp);
            M[i][r] = fp.sub(0, eval_red(red[i][r], alpha, fp));
        }
        auto piv = rref(M, r, fp);
        if (static_cast<int>(piv.size()) != r) { ++misses; continue; }
        // consistency of the overdetermined system at this point
        bool consistent = true;
        for (size_t i = piv.size(); i < M.size(); ++i)
            if (M[i][r] != 0) { consistent = false; break; }
        if (!consistent) { ++misses; continue; }
        xs.push_back(alpha);
        for (int j = 0; j < r; ++j) comp_vals[j].push_back(M[j][r]);
    }
    if (static_cast<int>(xs.size()) < npoints) {
        return out;
    }
    out.nums.resize(r);
    out.dens.resize(r);
    for (int j = 0; j < r; ++j) {
        if (!rational_interpolate(xs, comp_vals[j], fp, out.nums[j], out.dens[j])) {
            return out;
        }
    }
    out.ok = true;
    return out;
}

bool lift_poly(const VecP& img1, const VecP* img2, uint64_t p1, uint64_t p2,
               LaurentPoly& out) {
    out = LaurentPoly();
    size_t n = img1.size();
    if (img2 && img2->size() != n) return false;
    mpz_class m1(p1), m2(p2);
    mpz_class m = img2 ? m1 * m2 : m1;
    // precomputed CRT unit for the two-prime case
    mpz_class u2;
    if (img2) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
        u2 = m1 * inv;  // = 1 mod m2, 0 mod m1
    }
    for (size_t i = 0; i < n; ++i) {
        mpz_class z(static_cast<unsigned long>(img1[i]));
        if (img2) {
            mpz_class z2(static_cast<unsigned long>((*img2)[i]));
            z = (z + (z2 - z) * u2) % m;
            if (z < 0) z += m;
        }
        Rational c;
        if (!rat_recon(z, m, c)) return false;
        if (c != 0) out.set_coeff(static_cast<int>(i) * 1, c);
    }
    return true;
}

}  // namespace

ModSolveResult modular_nullspace(const PolyMat& rows, int ncols,
                                 int max_component_degree) {
    ModSolveResult res;
    if (rows.empty() || ncols == 0) return res;
    Fp fp1{kPrime1};

    // rank profile at a fixed point of the first prime
    const uint64_t probe_alpha = 5;
    MatP M(rows.size(), VecP(ncols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ncols; ++j) M[i][j] = eval_mod(rows[i][j], probe_alpha, fp1);
    std::vector<int> pivots = rref(M, ncols, fp1);
    if (static_cast<int>(pivots.size()) == ncols) {
        res.rank_full = true;
        return res;
    }
    // first free column gets the normalization x = 1; other free columns 0
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    int r = static_cast<int>(pivots.size());
    for (int npoints = 64; npoints <= 2 * max_component_degree + 8; npoints *= 2) {
        PrimeImages im1 = images_for_prime(rows, kPrime1, pivots, free_col, npoints);
        if (!im1.ok) continue;
        // try single-prime lift first
        std::vector<RatFunc> comps(r);
        bool lifted = true;
        bool used_second = false;
        PrimeImages im2;
        for (int j = 0; j < r && lifted; ++j) {
            LaurentPoly n, d;
            if (lift_poly(im1.nums[j], nullptr, kPrime1, 0, n) &&
                lift_poly(im1.dens[j], nullptr, kPrime1, 0, d) && !d.is_zero()) {
                comps[j] = RatFunc(n, d);
                continue;
            }
            if (!used_second) {
                im2 = images_for_prime(rows, kPrime2, pivots, free_col, npoints);
                used_second = true;
            }
            if (!im2.ok) { lifted = false; break; }
            if (lift_poly(im1.nums[j], &im2.nums[j], kPrime1, kPrime2, n) &&
                lift_poly(im1.dens[j], &im2.dens[j], kPrime1, kPrime2, d) && !d.is_zero()) {
                comps[j] = RatFunc(n, d);
            } else {
                lifted = false;
            }
        }
        if (!lifted) continue;
        RatVec x(ncols, RatFunc::zero());
        x[free_col] = RatFunc::one();
        for (int j = 0; j < r; ++j) x[pivots[j]] = comps[j];
        res.candidate = std::move(x);
        return res;
    }
    return res;
}

}  // namespace qholo
