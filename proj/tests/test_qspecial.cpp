#include "doctest.h"
#include "qholo/qspecial.hpp"

using namespace qholo;
using namespace qholo::qspecial;

TEST_SUITE("qspecial") {

TEST_CASE("brace and qint basics") {
    CHECK(brace(0).is_zero());
    CHECK(brace(1) == LaurentPoly::v_power(1) - LaurentPoly::v_power(-1));
    for (int n = 1; n <= 6; ++n) CHECK(brace(-n) == -brace(n));
    CHECK(qint(2) == LaurentPoly::v_power(1) + LaurentPoly::v_power(-1));
    for (int n = 0; n <= 8; ++n) CHECK(qint(n) * brace(1) == brace(n));
}

TEST_CASE("factorials") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
    CHECK(brace_fact(3) == brace(1) * brace(2) * brace(3));
    CHECK_THROWS_AS(qfact(-1), std::invalid_argument);
    CHECK_THROWS_AS(brace_fact(-2), std::invalid_argument);
}

TEST_CASE("falling brace product") {
    CHECK(brace_falling(5, -1).is_zero());
    CHECK(brace_falling(5, 0).is_one());
    CHECK(brace_falling(3, 2) == brace(3) * brace(2));
    CHECK(brace_falling(2, 4).is_zero());  // hits {0}
}

TEST_CASE("q-binomials") {
    CHECK(qbinom(7, 0).is_one());
    CHECK(qbinom(4, 5).is_zero());
    CHECK(qbinom(3, -2).is_zero());
    // Pascal-style product check against the definition on a grid
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(qbinom(n, k) * brace_fact(k) == brace_falling(n, k));
    CHECK(qbinom(2, 1) == qint(2));
    // symmetry qbinom(n,k) == qbinom(n,n-k)
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(qbinom(n, k) == qbinom(n, n - k));
}

TEST_CASE("pochhammer") {
    LaurentPoly q = LaurentPoly::q_power(1);
    CHECK(pochhammer(q, q, 0).is_one());
    CHECK(pochhammer(q, q, 2) ==
          (LaurentPoly::one() - q) * (LaurentPoly::one() - q * q));
    CHECK(pochhammer(LaurentPoly::q_power(-3), LaurentPoly::q_power(-1), 1) ==
          LaurentPoly::one() - LaurentPoly::q_power(-3));
    CHECK_THROWS_AS(pochhammer(q, q, -1), std::invalid_argument);
    // splitting property
    LaurentPoly base = LaurentPoly::q_power(-2), step = LaurentPoly::q_power(1);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            LaurentPoly shifted_base = base;
            for (int i = 0; i < a; ++i) shifted_base *= step;
            CHECK(pochhammer(base, step, a + b) ==
                  pochhammer(base, step, a) * pochhammer(shifted_base, step, b));
        }
}

TEST_CASE("cyclotomic kernel S") {
    for (int n = 1; n <= 6; ++n) CHECK(cyc_S(n, 1) == qint(n));
    CHECK(cyc_S(1, 1).is_one());
    CHECK(cyc_S(2, 2) == brace(3) * brace(2));
    CHECK(cyc_S(1, 2).is_zero());  // {2}_3 contains {0}
    CHECK_THROWS_AS(cyc_S(0, 1), std::invalid_argument);
}

TEST_CASE("cyclotomic kernel R") {
    // direct substitution: R(1,1) = {2}/({1}! [2]) * qbinom(2,0) = 1
    CHECK(cyc_R(1, 1) == RatFunc::one());
    CHECK(cyc_R(3, 5).is_zero());
    CHECK_THROWS_AS(cyc_R(0, 1), std::invalid_argument);
}

TEST_CASE("R and S are inverse kernels") {
    for (int n = 1; n <= 8; ++n) {
        for (int j = 1; j <= 8; ++j) {
            RatFunc acc;
            for (int k = 1; k <= std::max(n, j); ++k)
                acc += cyc_R(n, k) * RatFunc(cyc_S(k, j));
            CHECK(acc == (n == j ? RatFunc::one() : RatFunc::zero()));
        }
    }
}

}
