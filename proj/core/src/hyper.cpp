#include "qholo/hyper.hpp"

#include "qholo/qspecial.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qholo {

int AffForm::eval(const std::vector<int>& x) const {
    long v = c;
    for (size_t i = 0; i < k.size(); ++i) v += static_cast<long>(k[i]) * x[i];
    return static_cast<int>(v);
}

namespace {

AffForm aff_scale(const AffForm& a, int c) {
    AffForm r = a;
    r.c *= c;
    for (auto& x : r.k) x *= c;
    return r;
}

AffForm aff_add(const AffForm& a, const AffForm& b) {
    AffForm r = a;
    r.c += b.c;
    for (size_t i = 0; i < r.k.size(); ++i) r.k[i] += b.k[i];
    return r;
}

AffForm aff_shift(const AffForm& a, int c) {
    AffForm r = a;
    r.c += c;
    return r;
}

}  // namespace

QuadForm::QuadForm(int nvars, int c0)
    : c(c0), lin(nvars, 0), quad(nvars, std::vector<int>(nvars, 0)) {}

QuadForm::QuadForm(const AffForm& a)
    : QuadForm(static_cast<int>(a.k.size()), a.c) {
    lin = a.k;
}

long QuadForm::eval(const std::vector<int>& x) const {
    long v = c;
    for (size_t i = 0; i < lin.size(); ++i) {
        v += static_cast<long>(lin[i]) * x[i];
        for (size_t j = i; j < lin.size(); ++j)
            v += static_cast<long>(quad[i][j]) * x[i] * x[j];
    }
    return v;
}

AffForm QuadForm::shift_delta(int var) const {
    AffForm d(static_cast<int>(lin.size()), lin[var] + quad[var][var]);
    for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == var)
            d.k[i] = 2 * quad[var][var];
        else
            d.k[i] = quad[std::min<size_t>(i, var)][std::max<size_t>(i, var)];
    }
    return d;
}

QuadForm& QuadForm::operator+=(const QuadForm& o) {
    c += o.c;
    for (size_t i = 0; i < lin.size(); ++i) {
        lin[i] += o.lin[i];
        for (size_t j = i; j < lin.size(); ++j) quad[i][j] += o.quad[i][j];
    }
    return *this;
}

QuadForm QuadForm::product(const AffForm& a, const AffForm& b) {
    int n = static_cast<int>(a.k.size());
    QuadForm r(n, a.c * b.c);
    for (int i = 0; i < n; ++i) {
        r.lin[i] = a.c * b.k[i] + b.c * a.k[i];
        r.quad[i][i] = a.k[i] * b.k[i];
        for (int j = i + 1; j < n; ++j)
            r.quad[i][j] = a.k[i] * b.k[j] + a.k[j] * b.k[i];
    }
    return r;
}

namespace {

QuadForm quad_scale(const QuadForm& q, int c) {
    QuadForm r = q;
    r.c *= c;
    for (auto& x : r.lin) x *= c;
    for (auto& row : r.quad)
        for (auto& x : row) x *= c;
    return r;
}

}  // namespace

struct HyperTerm::Factor {
    enum Kind { QPow, Sign, Poch, BraceFall, QBinom } kind;
    QuadForm qpow;
    AffForm a1, a2;  ///< Sign: a1; Poch: base a1, count a2; others: N a1, K a2
    int step = 0;
    bool denom = false;
};

HyperTerm::HyperTerm(int nvars) : nvars_(nvars) {}
HyperTerm::HyperTerm(const HyperTerm&) = default;
HyperTerm::HyperTerm(HyperTerm&&) noexcept = default;
HyperTerm& HyperTerm::operator=(const HyperTerm&) = default;
HyperTerm& HyperTerm::operator=(HyperTerm&&) noexcept = default;
HyperTerm::~HyperTerm() = default;

void HyperTerm::mul_qpow(const QuadForm& e, bool denom) {
    Factor f;
    f.kind = Factor::QPow;
    f.qpow = denom ? quad_scale(e, -1) : e;
    f.denom = false;  // a q-power denominator is just the inverse power
    factors_.push_back(std::move(f));
}

void HyperTerm::mul_sign(const AffForm& a) {
    Factor f;
    f.kind = Factor::Sign;
    f.a1 = a;
    f.qpow = QuadForm(nvars_);
    factors_.push_back(std::move(f));
}

void HyperTerm::mul_poch(const AffForm& base, int step, const AffForm& count,
                         bool denom) {
    if (step == 0) throw std::invalid_argument("HyperTerm: zero Pochhammer step");
    Factor f;
    f.kind = Factor::Poch;
    f.a1 = base;
    f.a2 = count;
    f.step = step;
    f.denom = denom;
    f.qpow = QuadForm(nvars_);
    factors_.push_back(std::move(f));
}

void HyperTerm::mul_bracefall(const AffForm& N, const AffForm& K, bool denom) {
    Factor f;
    f.kind = Factor::BraceFall;
    f.a1 = N;
    f.a2 = K;
    f.denom = denom;
    f.qpow = QuadForm(nvars_);
    factors_.push_back(std::move(f));
}

void HyperTerm::mul_qbinom(const AffForm& N, const AffForm& K, bool denom) {
    Factor f;
    f.kind = Factor::QBinom;
    f.a1 = N;
    f.a2 = K;
    f.denom = denom;
    f.qpow = QuadForm(nvars_);
    factors_.push_back(std::move(f));
}

void HyperTerm::mul_const(const Rational& c) { scalar_ *= c; }

RatFunc HyperTerm::eval(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("HyperTerm::eval: wrong point size");
    LaurentPoly num(scalar_), den = LaurentPoly::one();
    long upow = 0;
    for (auto& f : factors_) {
        LaurentPoly fnum = LaurentPoly::one(), fden = LaurentPoly::one();
        switch (f.kind) {
            case Factor::QPow:
                upow += f.qpow.eval(point);
                continue;
            case Factor::Sign:
                if (((f.a1.eval(point) % 2) + 2) % 2 == 1) num = -num;
                continue;
            case Factor::Poch: {
                int cnt = f.a2.eval(point);
                int b = f.a1.eval(point);
                if (cnt >= 0) {
                    for (int i = 0; i < cnt; ++i)
                        fnum *= LaurentPoly::one() -
                                LaurentPoly::u_power(b + f.step * i);
                } else {
                    for (int j = 1; j <= -cnt; ++j)
                        fden *= LaurentPoly::one() -
                                LaurentPoly::u_power(b - f.step * j);
                }
                break;
            }
            case Factor::BraceFall:
                fnum = qspecial::brace_falling(f.a1.eval(point), f.a2.eval(point));
                break;
            case Factor::QBinom:
                fnum = qspecial::qbinom(f.a1.eval(point), f.a2.eval(point));
                break;
        }
        if (f.denom) std::swap(fnum, fden);
        if (fden.is_zero()) return RatFunc::zero();  // out of support
        num *= fnum;
        den *= fden;
        if (num.is_zero()) num = LaurentPoly::zero();  // keep scanning for 1/0
    }
    if (num.is_zero()) return RatFunc::zero();
    return RatFunc(num.shifted(static_cast<int>(upow)), den);
}

namespace {

// monomial u^{c} * prod S_i^{k[i]} over MPoly vars (u, S_0..S_{n-1})
MPoly aff_monomial(const AffForm& a, const Rational& coeff = 1) {
    int nv = static_cast<int>(a.k.size()) + 1;
    MPoly::Expo e(nv, 0);
    e[0] = a.c;
    for (size_t i = 0; i < a.k.size(); ++i) e[i + 1] = a.k[i];
    return MPoly::monomial(nv, coeff, e);
}

// 1 - u^{a}
MPoly one_minus(const AffForm& a) {
    int nv = static_cast<int>(a.k.size()) + 1;
    return MPoly(nv, 1) - aff_monomial(a);
}

struct RatioBuilder {
    FactoredRat acc;
    int nvars;

    explicit RatioBuilder(int term_nvars) : nvars(term_nvars) {
        acc = FactoredRat(MPoly(term_nvars + 1, Rational(1)));
    }

    void factor(const MPoly& f, bool denom) {
        if (denom)
            acc.mul_den_factor(f);
        else
            acc.mul_num_factor(f);
    }

    // contribution of the shift of prod_{i=0}^{C-1}(1 - u^{B + s i})
    void poch(const AffForm& B, int s, const AffForm& C, int var, bool invert) {
        int cB = B.coeff(var);
        if (cB % s != 0)
            throw std::domain_error(
                "shift_ratio: Pochhammer base shift not divisible by step");
        int t = cB / s;
        int cC = C.coeff(var);
        int delta = t + cC;
        // (a;s)_{m+delta}/(a;s)_m with argument u^{B + s(C + i)}
        for (int i = 0; i < delta; ++i)
            factor(one_minus(aff_shift(aff_add(B, aff_scale(C, s)), s * i)), invert);
        for (int i = 1; i <= -delta; ++i)
            factor(one_minus(aff_shift(aff_add(B, aff_scale(C, s)), -s * i)),
                   !invert);
        // divide by (a;s)_t
        for (int i = 0; i < t; ++i)
            factor(one_minus(aff_shift(B, s * i)), !invert);
        for (int j = 1; j <= -t; ++j)
            factor(one_minus(aff_shift(B, -s * j)), invert);
    }

    void qpow(const QuadForm& Q, int var, bool invert) {
        AffForm d = Q.shift_delta(var);
        acc.mul_num(aff_monomial(invert ? aff_scale(d, -1) : d));
    }

    // {N}_K = u^{K(2N-K+1)} (u^{-4N}; u^4)_K
    void bracefall(const AffForm& N, const AffForm& K, int var, bool invert) {
        QuadForm pre =
            QuadForm::product(K, aff_shift(aff_add(aff_scale(N, 2),
                                                   aff_scale(K, -1)), 1));
        qpow(pre, var, invert);
        poch(aff_scale(N, -4), 4, K, var, invert);
    }
};

}  // namespace

FactoredRat HyperTerm::shift_ratio(int var) const {
    if (var < 0 || var >= nvars_)
        throw std::out_of_range("HyperTerm::shift_ratio: bad variable");
    RatioBuilder rb(nvars_);
    for (auto& f : factors_) {
        switch (f.kind) {
            case Factor::QPow:
                rb.qpow(f.qpow, var, false);
                break;
            case Factor::Sign:
                if (((f.a1.coeff(var) % 2) + 2) % 2 == 1)
                    rb.acc.mul_num(MPoly(nvars_ + 1, Rational(-1)));
                break;
            case Factor::Poch:
                rb.poch(f.a1, f.step, f.a2, var, f.denom);
                break;
            case Factor::BraceFall:
                rb.bracefall(f.a1, f.a2, var, f.denom);
                break;
            case Factor::QBinom:
                rb.bracefall(f.a1, f.a2, var, f.denom);
                rb.bracefall(f.a2, f.a2, var, !f.denom);
                break;
        }
    }
    return rb.acc;
}

HyperTerm::Shape HyperTerm::shape() const {
    Shape s;
    auto q_units = [](int c) { return (std::abs(c) + 3) / 4; };
    auto aff_max_q = [&](const AffForm& a) {
        int m = q_units(a.c);
        for (int c : a.k) m = std::max(m, q_units(c));
        return m;
    };
    auto aff_max = [](const AffForm& a) {
        int m = std::abs(a.c);
        for (int c : a.k) m = std::max(m, std::abs(c));
        return m;
    };
    auto count_sq = [this](const AffForm& a) {
        long r = 0;
        for (int v = 1; v < nvars_; ++v)
            r += static_cast<long>(a.k[v]) * a.k[v];
        return r;
    };
    int amax = 0;
    for (auto& f : factors_) {
        switch (f.kind) {
            case Factor::QPow: {
                for (size_t i = 0; i < f.qpow.lin.size(); ++i) {
                    amax = std::max(amax, q_units(f.qpow.lin[i]));
                    for (size_t j = i; j < f.qpow.lin.size(); ++j)
                        amax = std::max(amax, q_units(f.qpow.quad[i][j]));
                }
                amax = std::max(amax, q_units(f.qpow.c));
                continue;
            }
            case Factor::Sign:
                continue;
            case Factor::Poch:
                s.max_coeff = std::max({s.max_coeff, aff_max_q(f.a1), aff_max(f.a2)});
                break;
            case Factor::BraceFall:
            case Factor::QBinom:
                s.max_coeff = std::max({s.max_coeff, aff_max(f.a1), aff_max(f.a2)});
                break;
        }
        ++(f.denom ? s.den_factors : s.num_factors);
        s.refined += count_sq(f.a2);
    }
    s.max_coeff += amax;
    return s;
}

std::string HyperTerm::str() const {
    std::ostringstream os;
    os << "term in " << nvars_ << " variables, " << factors_.size() << " factors";
    return os.str();
}

namespace {

// visit every lattice point of [0,cap]^r with max coordinate == layer
template <typename F>
void visit_layer(int r, int layer, std::vector<int>& pt, int depth, bool pinned,
                 const F& fn) {
    if (depth == r) {
        if (pinned) fn(pt);
        return;
    }
    for (int v = 0; v <= layer; ++v) {
        pt[depth + 1] = v;
        visit_layer(r, layer, pt, depth + 1, pinned || v == layer, fn);
    }
}

}  // namespace

RatFunc multisum(const HyperTerm& t, int n, int cap) {
    const int r = t.nvars() - 1;
    if (cap < 0) cap = 10 * std::max(n, 2);
    std::vector<int> pt(t.nvars(), 0);
    pt[0] = n;
    if (r == 0) return t.eval(pt);
    if (r == 1) {
        // single sums: update the running term by the k-shift ratio instead
        // of rebuilding its Pochhammer products at every k.  The partial sum
        // is kept as an unreduced numerator over the running common
        // denominator, so no gcd work happens inside the loop; across zeros
        // of the term or poles of the ratio the accumulator is flushed and
        // restarted from a direct evaluation.
        const FactoredRat rho = t.shift_ratio(1);
        RatFunc first = t.eval(pt);
        RatFunc total;
        LaurentPoly sum_num = first.num(), den = first.den();
        LaurentPoly cur = first.num();  // current term numerator over den
        int zero_run = cur.is_zero() ? 1 : 0;
        for (int k = 1; k <= cap + 1; ++k) {
            bool stepped = false;
            if (!cur.is_zero()) {
                bool pole = false;
                LaurentPoly rnum = rho.num().substitute({n, k - 1});
                LaurentPoly rden = LaurentPoly::one();
                for (auto& [fac, m] : rho.den_factors()) {
                    LaurentPoly dv = fac.substitute({n, k - 1});
                    if (dv.is_zero()) {
                        pole = true;
                        break;
                    }
                    for (int i = 0; i < m; ++i) rden *= dv;
                }
                if (!pole) {
                    cur = cur * rnum;
                    sum_num = sum_num * rden + cur;
                    den = den * rden;
                    stepped = true;
                }
            }
            if (!stepped) {
                pt[1] = k;
                RatFunc v = t.eval(pt);
                if (!v.is_zero() || !sum_num.is_zero()) {
                    total += RatFunc(sum_num, den);
                    sum_num = v.num();
                    den = v.den();
                }
                cur = v.num();
            }
            if (cur.is_zero()) {
                if (++zero_run >= 2) return total + RatFunc(sum_num, den);
            } else {
                zero_run = 0;
            }
        }
        throw std::runtime_error(
            "multisum: summation support not detected within cap");
    }
    RatFunc total;
    int zero_layers = 0;
    for (int layer = 0;; ++layer) {
        bool all_zero = true;
        visit_layer(r, layer, pt, 0, false, [&](const std::vector<int>& p) {
            RatFunc v = t.eval(p);
            if (!v.is_zero()) {
                all_zero = false;
                total += v;
            }
        });
        if (all_zero) {
            if (++zero_layers >= 2) return total;
        } else {
            zero_layers = 0;
        }
        if (layer > cap)
            throw std::runtime_error(
                "multisum: summation support not detected within cap");
    }
}

HyperTerm summand_family(const std::string& name) {
    auto aff = [](int c, int n_co, int k_co) {
        AffForm a(2, c);
        a.k[0] = n_co;
        a.k[1] = k_co;
        return a;
    };
    if (name == "trefoil-intro") {
        // q^{(1-n)/2}/(1-q^{-1}) sum_k q^{-kn} (q^{-n};q)_{k+1}
        HyperTerm t(2);
        QuadForm e(2, 2);
        e.lin[0] = -2;       // u^{2(1-n)}
        e.quad[0][1] = -4;   // u^{-4nk}
        t.mul_qpow(e);
        t.mul_poch(aff(-4, 0, 0), 4, aff(1, 0, 0), true);  // 1/(1-q^{-1})
        t.mul_poch(aff(0, -4, 0), 4, aff(1, 0, 1));        // (q^{-n};q)_{k+1}
        return t;
    }
    if (name == "figure8-jones") {
        // sum_k q^{nk} (q^{-n-1};q^{-1})_k (q^{-n+1};q)_k
        HyperTerm t(2);
        QuadForm e(2);
        e.quad[0][1] = 4;
        t.mul_qpow(e);
        t.mul_poch(aff(-4, -4, 0), -4, aff(0, 0, 1));
        t.mul_poch(aff(4, -4, 0), 4, aff(0, 0, 1));
        return t;
    }
    if (name.rfind("twist:", 0) == 0) {
        int p = 0;
        {
            const std::string arg = name.substr(6);
            char* end = nullptr;
            long v = std::strtol(arg.c_str(), &end, 10);
            if (end == arg.c_str() || *end != '\0')
                throw std::invalid_argument("summand_family: bad twist parameter");
            p = static_cast<int>(v);
        }
        // c(p,n) = (-1)^{n+1} q^{n(n+3)/2} sum_k (-1)^{k+1}
        //   q^{k(k+1)p + k(k-1)/2} (1-q^{2k+1}) (q;q)_n
        //   / ((q;q)_{n+k+1} (q;q)_{n-k})
        HyperTerm t(2);
        t.mul_sign(aff(1, 1, 0));
        t.mul_sign(aff(1, 0, 1));
        QuadForm e(2);
        e.quad[0][0] = 2;  // u^{2n^2+6n} = q^{n(n+3)/2}
        e.lin[0] = 6;
        e.quad[1][1] = 4 * p + 2;  // q^{k(k+1)p + k(k-1)/2}
        e.lin[1] = 4 * p - 2;
        t.mul_qpow(e);
        t.mul_poch(aff(4, 0, 8), 4, aff(1, 0, 0));   // 1 - q^{2k+1}
        t.mul_poch(aff(4, 0, 0), 4, aff(0, 1, 0));   // (q;q)_n
        t.mul_poch(aff(4, 0, 0), 4, aff(1, 1, 1), true);
        t.mul_poch(aff(4, 0, 0), 4, aff(0, 1, -1), true);
        return t;
    }
    throw std::invalid_argument("summand_family: unknown family " + name);
}

namespace {

// affine form over (n, k_1..k_c) from a crossing label form
AffForm label_aff(const LinearForm& f, int nvars) {
    AffForm a(nvars, f.constant());
    for (auto& [j, c] : f.coeffs()) a.k[j + 1] = c;
    return a;
}

}  // namespace

HyperTerm build_Fw(const CrossingLabels& labels, const BraidWord& b) {
    const int c = static_cast<int>(labels.crossings.size());
    const int nv = 1 + c;
    HyperTerm t(nv);
    AffForm n_var(nv);
    n_var.k[0] = 1;
    // per-strand weight for strands 2..m: the K^{-1} diagonal weight
    // v^{-(n-1-2 b_i)}; the printed v^{n/2-b_i} fails the state-sum
    // cross-check (see tests)
    for (int i = 1; i < b.strands; ++i) {
        AffForm bi = label_aff(labels.top[i], nv);
        QuadForm w(QuadForm::product(aff_add(aff_scale(n_var, -2),
                                             aff_shift(aff_scale(bi, 4), 2)),
                                     AffForm(nv, 1)));
        t.mul_qpow(w);
    }
    for (int j = 0; j < c; ++j) {
        const auto& cr = labels.crossings[j];
        AffForm a = label_aff(cr.x, nv);
        AffForm y = label_aff(cr.y, nv);
        AffForm k(nv);
        k.k[j + 1] = 1;
        AffForm na = aff_shift(aff_add(n_var, aff_scale(a, -2)), -1);  // n-1-2a
        AffForm ny = aff_shift(aff_add(n_var, aff_scale(y, -2)), -1);  // n-1-2y
        if (cr.sign > 0) {
            t.mul_sign(k);
            QuadForm e = QuadForm::product(na, ny);
            e += QuadForm::product(k, aff_shift(k, -1));
            t.mul_qpow(quad_scale(e, -1));
            t.mul_qbinom(aff_add(y, k), k);
            t.mul_bracefall(aff_shift(aff_add(n_var, aff_add(k, aff_scale(a, -1))), -1), k);
        } else {
            QuadForm e = QuadForm::product(aff_add(na, aff_scale(k, -2)),
                                           aff_add(ny, aff_scale(k, 2)));
            e += QuadForm::product(k, aff_shift(k, -1));
            t.mul_qpow(e);
            t.mul_qbinom(aff_add(a, k), k);
            t.mul_bracefall(aff_shift(aff_add(n_var, aff_add(k, aff_scale(y, -1))), -1), k);
        }
    }
    return t;
}

namespace {

// expression parser for affine/quadratic forms over (n, k1..kr)
struct ExprParser {
    std::string s;
    size_t i = 0;
    int nvars;

    ExprParser(std::string text, int nv) : s(std::move(text)), nvars(nv) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& w) {
        throw std::invalid_argument("parse_term: " + w + " at position " +
                                    std::to_string(i));
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    QuadForm atom() {
        skip();
        if (peek() == '(') {
            ++i;
            QuadForm q = expr();
            if (peek() != ')') fail("expected ')'");
            ++i;
            return q;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            int v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            return QuadForm(nvars, v);
        }
        if (peek() == 'n') {
            ++i;
            QuadForm q(nvars);
            q.lin[0] = 1;
            return q;
        }
        if (peek() == 'k') {
            ++i;
            int v = 0;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("expected index after k");
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            if (v < 1 || v >= nvars) fail("summation variable out of range");
            QuadForm q(nvars);
            q.lin[v] = 1;
            return q;
        }
        fail("expected atom");
    }

    QuadForm factor() {
        QuadForm q = atom();
        while (peek() == '*') {
            ++i;
            QuadForm r = atom();
            // product of two forms; at most one may be genuinely quadratic
            auto is_affine = [](const QuadForm& x) {
                for (auto& row : x.quad)
                    for (int v : row)
                        if (v != 0) return false;
                return true;
            };
            if (!is_affine(q) || !is_affine(r)) fail("degree above quadratic");
            AffForm a(nvars, q.c), b(nvars, r.c);
            a.k = q.lin;
            b.k = r.lin;
            q = QuadForm::product(a, b);
        }
        return q;
    }

    QuadForm expr() {
        bool neg = false;
        if (peek() == '+') ++i;
        else if (peek() == '-') { neg = true; ++i; }
        QuadForm acc = factor();
        if (neg) acc = quad_scale(acc, -1);
        while (true) {
            char op = peek();
            if (op != '+' && op != '-') break;
            ++i;
            QuadForm r = factor();
            acc += op == '-' ? quad_scale(r, -1) : r;
        }
        return acc;
    }

    QuadForm parse_all() {
        QuadForm q = expr();
        skip();
        if (i != s.size()) fail("trailing characters");
        return q;
    }
};

AffForm to_affine(const QuadForm& q) {
    for (auto& row : q.quad)
        for (int v : row)
            if (v != 0)
                throw std::invalid_argument("parse_term: expected affine expression");
    AffForm a(static_cast<int>(q.lin.size()), q.c);
    a.k = q.lin;
    return a;
}

// monomial u^{affine}: q^E, v^E, u^E, bare q/v/u, or integer 1
AffForm parse_monomial(const std::string& text, int nvars, int* step_unit) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    int unit = 4;
    if (i < text.size() && (text[i] == 'q' || text[i] == 'v' || text[i] == 'u')) {
        unit = text[i] == 'q' ? 4 : text[i] == 'v' ? 2 : 1;
        ++i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '^') {
            ExprParser p(text.substr(i + 1), nvars);
            AffForm e = to_affine(p.parse_all());
            if (step_unit) *step_unit = unit;
            return aff_scale(e, unit);
        }
        if (i != text.size())
            throw std::invalid_argument("parse_term: bad monomial " + text);
        if (step_unit) *step_unit = unit;
        return AffForm(nvars, unit);
    }
    if (text.substr(i) == "1") {
        if (step_unit) *step_unit = 4;
        return AffForm(nvars, 0);
    }
    throw std::invalid_argument("parse_term: bad monomial " + text);
}

}  // namespace

HyperTerm parse_term(const std::string& text, int num_summation_vars) {
    const int nv = 1 + num_summation_vars;
    HyperTerm t(nv);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip();
        if (i >= text.size()) break;
        bool denom = false;
        if (text[i] == '/') {
            denom = true;
            ++i;
            skip();
        }
        size_t name_start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        std::string fname = text.substr(name_start, i - name_start);
        skip();
        if (i >= text.size() || text[i] != '(')
            throw std::invalid_argument("parse_term: expected '(' after " + fname);
        // find matching ')'
        int depth = 1;
        size_t arg_start = ++i;
        while (i < text.size() && depth > 0) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            ++i;
        }
        if (depth != 0) throw std::invalid_argument("parse_term: unbalanced '('");
        std::string args = text.substr(arg_start, i - arg_start - 1);
        auto split = [&args](char sep) {
            std::vector<std::string> out;
            int d = 0;
            size_t start = 0;
            for (size_t j = 0; j <= args.size(); ++j) {
                if (j == args.size() || (args[j] == sep && d == 0)) {
                    out.push_back(args.substr(start, j - start));
                    start = j + 1;
                } else if (args[j] == '(') {
                    ++d;
                } else if (args[j] == ')') {
                    --d;
                }
            }
            return out;
        };
        if (fname == "poch") {
            auto parts = split(';');
            if (parts.size() != 3)
                throw std::invalid_argument("parse_term: poch needs base;step;count");
            int step_unit = 4;
            AffForm base = parse_monomial(parts[0], nv, nullptr);
            AffForm step = parse_monomial(parts[1], nv, &step_unit);
            for (int co : step.k)
                if (co != 0)
                    throw std::invalid_argument("parse_term: step must be constant");
            ExprParser p(parts[2], nv);
            t.mul_poch(base, step.c, to_affine(p.parse_all()), denom);
        } else if (fname == "qpow") {
            ExprParser p(args, nv);
            t.mul_qpow(p.parse_all(), denom);
        } else if (fname == "sign") {
            ExprParser p(args, nv);
            t.mul_sign(to_affine(p.parse_all()));
        } else if (fname == "binom" || fname == "bracefall") {
            auto parts = split(',');
            if (parts.size() != 2)
                throw std::invalid_argument("parse_term: " + fname +
                                            " needs two arguments");
            ExprParser p1(parts[0], nv), p2(parts[1], nv);
            AffForm a1 = to_affine(p1.parse_all()), a2 = to_affine(p2.parse_all());
            if (fname == "binom")
                t.mul_qbinom(a1, a2, denom);
            else
                t.mul_bracefall(a1, a2, denom);
        } else {
            throw std::invalid_argument("parse_term: unknown factor " + fname);
        }
    }
    return t;
}

}  // namespace qholo
