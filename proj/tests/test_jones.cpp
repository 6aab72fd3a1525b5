#include "doctest.h"
#include "qholo/jones.hpp"
#include "qholo/qspecial.hpp"

#include <cstdlib>
#include <random>

using namespace qholo;
using qspecial::qint;

namespace {

using Mat = std::map<std::pair<int, int>, LaurentPoly>;

// dense matrix of B_sign(n1,n2) indexed by flattened (in, out) pairs
Mat b_matrix(int sign, int n1, int n2) {
    Mat M;
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                for (int d = 0; d < n1; ++d) {
                    LaurentPoly e = b_entry(sign, n1, n2, a, b, c, d);
                    if (!e.is_zero()) M[{a * n2 + b, c * n1 + d}] = e;
                }
    return M;
}

// intro-section closed form for the 0-framed trefoil (as printed; this is
// the mirror of the [1,1,1] closure)
LaurentPoly trefoil_intro(int n) {
    if (n == 0) return LaurentPoly::zero();
    LaurentPoly sum;
    for (int k = 0; k < n; ++k) {
        LaurentPoly p = LaurentPoly::q_power(-k * n);
        for (int i = 0; i <= k; ++i)
            p *= LaurentPoly::one() - LaurentPoly::q_power(i - n);
        sum += p;
    }
    sum = sum.shifted(2 * (1 - n));  // q^((1-n)/2)
    return sum.exact_div(LaurentPoly::one() - LaurentPoly::q_power(-1));
}

}  // namespace

TEST_SUITE("jones") {

TEST_CASE("f building blocks") {
    // k = 0: binomial and falling brace collapse to 1
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2)
            for (int a = 0; a < n1; ++a)
                for (int b = 0; b < n2; ++b)
                    CHECK(f_plus(n1, n2, a, b, 0) ==
                          LaurentPoly::u_power(-(n1 - 1 - 2 * a) * (n2 - 1 - 2 * b)));
    CHECK(f_plus(3, 3, 1, 1, -1).is_zero());
    CHECK(f_minus(3, 3, 1, 1, -2).is_zero());
    // hand substitution: f_-(2,2;0,1,1) = v^(-1/2) {1} = q^(1/4) - q^(-3/4)
    CHECK(f_minus(2, 2, 0, 1, 1) ==
          LaurentPoly::u_power(1) - LaurentPoly::u_power(-3));
}

TEST_CASE("b_entry basics") {
    CHECK(b_entry(1, 3, 3, 1, 1, 2, 1).is_zero());  // c-b != a-d
    CHECK(b_entry(1, 2, 2, 0, 0, 0, 0) == LaurentPoly::u_power(-1));  // v^(-1/2)
}

TEST_CASE("B_- inverts B_+ on colors up to 5") {
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 1; n2 <= 5; ++n2) {
            Mat P = b_matrix(1, n1, n2), M = b_matrix(-1, n2, n1);
            // both compositions: M.P on V(n1)xV(n2), P.M on V(n2)xV(n1)
            for (int lhs = 0; lhs < 2; ++lhs) {
                const Mat& A = lhs ? P : M;
                const Mat& B = lhs ? M : P;
                int dim = n1 * n2;
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) {
                        LaurentPoly acc;
                        for (int k = 0; k < dim; ++k) {
                            auto a = B.find({i, k});
                            auto b = A.find({k, j});
                            if (a != B.end() && b != A.end())
                                acc += a->second * b->second;
                        }
                        CHECK(acc == (i == j ? LaurentPoly::one()
                                             : LaurentPoly::zero()));
                    }
            }
        }
}

TEST_CASE("apply_crossing matches dense matrix and inverts") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> iv(0, 2), cv(-4, 4);
    for (int t = 0; t < 10; ++t) {
        StateVector s;
        for (int j = 0; j < 4; ++j)
            s.entries[{iv(rng), iv(rng)}] += LaurentPoly::monomial(cv(rng), cv(rng));
        std::vector<int> colors{3, 3};
        StateVector fwd = apply_crossing(s, 1, 1, colors);
        StateVector back = apply_crossing(fwd, 1, -1, colors);
        // drop zero entries for comparison
        std::map<std::vector<int>, LaurentPoly> orig;
        for (auto& [k, v] : s.entries)
            if (!v.is_zero()) orig[k] = v;
        CHECK(back.entries == orig);
    }
    // e0 x e0 on V(2)xV(2): only k=0 survives, coefficient v^(-1/2)
    StateVector s;
    s.entries[{0, 0}] = LaurentPoly::one();
    std::vector<int> colors{2, 2};
    StateVector out = apply_crossing(s, 1, 1, colors);
    REQUIRE(out.entries.size() == 1);
    CHECK(out.entries.at({0, 0}) == LaurentPoly::u_power(-1));
    CHECK_THROWS_AS(apply_crossing(s, 2, 1, colors), std::out_of_range);
}

TEST_CASE("Yang-Baxter relation") {
    for (int n = 1; n <= 4; ++n) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    StateVector s;
                    s.entries[{a, b, c}] = LaurentPoly::one();
                    std::vector<int> col1{n, n, n}, col2{n, n, n};
                    StateVector lhs = s, rhs = s;
                    for (int i : {1, 2, 1}) lhs = apply_crossing(lhs, i, 1, col1);
                    for (int i : {2, 1, 2}) rhs = apply_crossing(rhs, i, 1, col2);
                    CHECK(lhs.entries == rhs.entries);
                }
    }
}

TEST_CASE("quantum trace of the trivial braid is the quantum dimension") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(quantum_trace(parse_braid("[]", 1), {n}) == qint(n));
        CHECK(broken_trace(parse_braid("[]", 1), n).is_one());
    }
    CHECK_THROWS_AS(quantum_trace(parse_braid("[]", 2), {3}), std::invalid_argument);
    CHECK_THROWS_AS(broken_trace(parse_braid("[1,1]"), 3), std::invalid_argument);
}

TEST_CASE("closed trace equals broken trace times quantum dimension") {
    for (const char* w : {"[1]", "[1,1,1]", "[1,-2,1,-2]"}) {
        BraidWord b = parse_braid(w);
        for (int n = 1; n <= 4; ++n)
            CHECK(quantum_trace(b, {n}) == broken_trace(b, n) * qint(n));
    }
}

TEST_CASE("unknot normalizations") {
    BraidWord u = parse_braid("[1]");
    for (int n = 1; n <= 10; ++n) {
        CHECK(jones(u, n, Normalization::zero_framed) == qint(n));
        CHECK(jones(u, n, Normalization::long_knot).is_one());
    }
    // framed value carries the twist factor v^(-(n^2-1)/2) per writhe unit
    for (int n = 1; n <= 6; ++n)
        CHECK(jones(u, n, Normalization::framed) ==
              qint(n).shifted(-(n * n - 1)));
}

TEST_CASE("trefoil against the closed form") {
    BraidWord tre = parse_braid("[1,1,1]");
    CHECK(jones(tre, 1, Normalization::zero_framed).is_one());
    // the printed right-hand-trefoil formula is the mirror of this closure
    CHECK(jones(tre, 2, Normalization::zero_framed, true) ==
          LaurentPoly::parse("q^(-1/2) + q^(-3/2) + q^(-5/2) - q^(-9/2)"));
    for (int n = 0; n <= 6; ++n)
        CHECK(jones(tre, n, Normalization::zero_framed, true) == trefoil_intro(n));
}

TEST_CASE("Markov stability") {
    BraidWord a = parse_braid("[1]");
    BraidWord b = parse_braid("[1,1,-1]");
    BraidWord c = parse_braid("[1,2]");  // stabilization of [1]
    for (int n = 1; n <= 6; ++n) {
        LaurentPoly ja = jones(a, n, Normalization::zero_framed);
        CHECK(ja == jones(b, n, Normalization::zero_framed));
        CHECK(ja == jones(c, n, Normalization::zero_framed));
    }
}

TEST_CASE("long-knot values are integral Laurent polynomials in q") {
    for (const char* w : {"[1,1,1]", "[1,-2,1,-2]"}) {
        BraidWord b = parse_braid(w);
        for (int n = 1; n <= 6; ++n)
            CHECK(jones(b, n, Normalization::long_knot).is_integral_q());
    }
}

TEST_CASE("jones_range agrees with pointwise evaluation") {
    BraidWord tre = parse_braid("[1,1,1]");
    setenv("QHOLO_THREADS", "3", 1);
    auto r = jones_range(tre, 0, 5, Normalization::zero_framed);
    unsetenv("QHOLO_THREADS");
    REQUIRE(r.size() == 6);
    for (int n = 0; n <= 5; ++n)
        CHECK(r[n] == jones(tre, n, Normalization::zero_framed));
}

}
