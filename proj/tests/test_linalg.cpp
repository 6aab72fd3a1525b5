#include "doctest.h"
#include "qholo/linalg.hpp"
#include "qholo/modsolve.hpp"

using namespace qholo;

namespace {

bool annihilates(const RatMat& M, const RatVec& v) {
    for (auto& y : mat_vec(M, v))
        if (!y.is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("1x1 system") {
    RatMat M = {{RatFunc(LaurentPoly::q_power(1))}};
    RatVec rhs = {RatFunc(LaurentPoly::q_power(2))};
    auto s = solve_linear(M, rhs);
    REQUIRE(s.consistent);
    REQUIRE(s.particular);
    CHECK((*s.particular)[0] == RatFunc(LaurentPoly::q_power(1)));
}

TEST_CASE("identity system returns rhs") {
    RatMat M = {{RatFunc::one(), RatFunc::zero()}, {RatFunc::zero(), RatFunc::one()}};
    RatVec rhs = {RatFunc(LaurentPoly::q_power(-1)), RatFunc(Rational(5))};
    auto s = solve_linear(M, rhs);
    REQUIRE(s.particular);
    CHECK(*s.particular == rhs);
    CHECK(s.nullspace.empty());
}

TEST_CASE("rank-deficient 2x2 nullspace") {
    // [[1, q], [q^-1, 1]] has determinant 0; nullspace spanned by (q, -1)
    RatMat M = {{RatFunc::one(), RatFunc(LaurentPoly::q_power(1))},
                {RatFunc(LaurentPoly::q_power(-1)), RatFunc::one()}};
    auto ns = nullspace(M);
    REQUIRE(ns.size() == 1);
    CHECK(annihilates(M, ns[0]));
    // proportional to (q, -1)
    CHECK(ns[0][0] * RatFunc(Rational(-1)) == ns[0][1] * RatFunc(LaurentPoly::q_power(1)));
}

TEST_CASE("inconsistent system reported") {
    RatMat M = {{RatFunc::one()}, {RatFunc::one()}};
    RatVec rhs = {RatFunc::one(), RatFunc::zero()};
    auto s = solve_linear(M, rhs);
    CHECK_FALSE(s.consistent);
}

TEST_CASE("solutions satisfy the system exactly") {
    LaurentPoly q = LaurentPoly::q_power(1);
    RatMat M = {
        {RatFunc(q), RatFunc(q + LaurentPoly::one()), RatFunc::one()},
        {RatFunc::one(), RatFunc(q, q + LaurentPoly::one()), RatFunc::zero()},
    };
    RatVec rhs = {RatFunc(q * q), RatFunc(LaurentPoly::one(), q)};
    auto s = solve_linear(M, rhs);
    REQUIRE(s.consistent);
    REQUIRE(s.particular);
    CHECK(mat_vec(M, *s.particular) == rhs);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(annihilates(M, s.nullspace[0]));
}

TEST_CASE("modular solver agrees with exact elimination") {
    LaurentPoly q = LaurentPoly::q_power(1);
    PolyMat rows = {
        {q, q + LaurentPoly::one(), LaurentPoly::one()},
        {LaurentPoly::one(), q, q * q},
    };
    auto exact = nullspace_poly(rows);
    REQUIRE(exact.size() == 1);
    auto mod = modular_nullspace(rows, 3);
    CHECK_FALSE(mod.rank_full);
    REQUIRE(mod.candidate);
    // same line: cross-ratios agree
    RatMat M(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& p : rows[i]) M[i].push_back(RatFunc(p));
    CHECK(annihilates(M, *mod.candidate));
    for (int j = 0; j < 3; ++j)
        CHECK(exact[0][j] * (*mod.candidate)[2] == (*mod.candidate)[j] * exact[0][2]);
}

TEST_CASE("modular solver proves trivial nullspace") {
    LaurentPoly q = LaurentPoly::q_power(1);
    PolyMat rows = {{q, q * q}, {LaurentPoly::one(), q * q * q}};
    auto mod = modular_nullspace(rows, 2);
    CHECK(mod.rank_full);
    CHECK_FALSE(mod.candidate.has_value());
}

}
