#include "doctest.h"
#include "qholo/laurent.hpp"

#include <random>

using namespace qholo;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-8, 8), num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i)
        p += LaurentPoly::monomial(Rational(num(rng), den(rng)), expo(rng));
    return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("monomial constructors and powers") {
    CHECK(LaurentPoly::q_power(1) == LaurentPoly::u_power(4));
    CHECK(LaurentPoly::v_power(1) == LaurentPoly::u_power(2));
    CHECK(LaurentPoly::q_power(-2) == LaurentPoly::u_power(-8));
    CHECK(LaurentPoly::zero().is_zero());
    CHECK(LaurentPoly::one().is_one());
}

TEST_CASE("string rendering uses q with quarter powers") {
    LaurentPoly p = LaurentPoly::monomial(1, -2)   // q^(-1/2)
                  + LaurentPoly::monomial(1, -6)
                  + LaurentPoly::monomial(1, -10)
                  - LaurentPoly::monomial(1, -18);
    CHECK(p.str() == "q^(-1/2) + q^(-3/2) + q^(-5/2) - q^(-9/2)");
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK(LaurentPoly::one().str() == "1");
    CHECK((LaurentPoly::q_power(2) - LaurentPoly::one()).str() == "q^2 - 1");
}

TEST_CASE("parse inverts str") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    CHECK(LaurentPoly::parse("q^(-1/2) + q^(-3/2) + q^(-5/2) - q^(-9/2)")
          == LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(1, -6)
           + LaurentPoly::monomial(1, -10) - LaurentPoly::monomial(1, -18));
    CHECK_THROWS_AS(LaurentPoly::parse("q^^2"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("q^(1/3)"), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly::zero());
    }
}

TEST_CASE("exact division") {
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly a = (q - LaurentPoly::one()) * (q * q + LaurentPoly::one());
    CHECK(a.exact_div(q - LaurentPoly::one()) == q * q + LaurentPoly::one());
    LaurentPoly quot;
    CHECK_FALSE((q + LaurentPoly::one()).try_exact_div(q - LaurentPoly::one(), quot));
    CHECK_THROWS_AS((q + LaurentPoly::one()).exact_div(q - LaurentPoly::one()),
                    std::domain_error);
    // divisor with negative exponents
    LaurentPoly d = LaurentPoly::u_power(-3) + LaurentPoly::u_power(2);
    LaurentPoly m = LaurentPoly::u_power(-5) - LaurentPoly::u_power(4);
    CHECK((d * m).exact_div(d) == m);
}

TEST_CASE("gcd and content") {
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly a = (q - LaurentPoly::one()) * (q + LaurentPoly::one());
    LaurentPoly b = (q - LaurentPoly::one()) * q;
    LaurentPoly g = LaurentPoly::gcd(a, b);
    CHECK(g == (q - LaurentPoly::one()).unit_normalized());
    CHECK(LaurentPoly::gcd(a, LaurentPoly::zero()) == a.unit_normalized());
    CHECK((LaurentPoly::monomial(Rational(4, 3), 0)
           + LaurentPoly::monomial(Rational(2, 9), 4)).content() == Rational(2, 9));
}

TEST_CASE("mirror substitutes q -> 1/q") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).mirrored() == a.mirrored() * b.mirrored());
        CHECK(a.mirrored().mirrored() == a);
    }
    CHECK(LaurentPoly::q_power(3).mirrored() == LaurentPoly::q_power(-3));
}

TEST_CASE("integrality predicate") {
    CHECK(LaurentPoly::q_power(-5).is_integral_q());
    CHECK_FALSE(LaurentPoly::v_power(1).is_integral_q());
    CHECK_FALSE(LaurentPoly::monomial(Rational(1, 2), 4).is_integral_q());
}

TEST_CASE("json rendering") {
    LaurentPoly p = LaurentPoly::monomial(Rational(-1, 2), -2) + LaurentPoly::q_power(1);
    CHECK(p.json() == "[[-2,\"-1\",\"2\"],[4,\"1\",\"1\"]]");
    CHECK(LaurentPoly::zero().json() == "[]");
}

}
