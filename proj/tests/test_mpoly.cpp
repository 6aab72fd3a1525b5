#include "doctest.h"
#include "qholo/mpoly.hpp"

#include <random>

using namespace qholo;

namespace {

MPoly rmpoly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), num(-5, 5);
    MPoly p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        MPoly::Expo e(nvars);
        for (auto& x : e) x = expo(rng);
        p += MPoly::monomial(nvars, Rational(num(rng)), e);
    }
    return p;
}

}  // namespace

TEST_SUITE("mpoly") {

TEST_CASE("arithmetic and substitution commute") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int i = 0; i < 30; ++i) {
        MPoly a = rmpoly(rng, 3), b = rmpoly(rng, 3);
        std::vector<int> vals = {val(rng), val(rng)};
        CHECK((a * b).substitute(vals) == a.substitute(vals) * b.substitute(vals));
        CHECK((a + b).substitute(vals) == a.substitute(vals) + b.substitute(vals));
    }
}

TEST_CASE("shift_symbol implements argument shifts") {
    // p(u, S) with S standing for u^x; shifting x -> x+2 multiplies each
    // term by u^(2*deg_S)
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int i = 0; i < 20; ++i) {
        MPoly p = rmpoly(rng, 2);
        int x = val(rng);
        CHECK(p.shift_symbol(1, 2).substitute({x}) == p.substitute({x + 2}));
    }
}

TEST_CASE("coeff_map splits by symbol exponents") {
    MPoly p = MPoly::sym_monomial(2, 3, 1, 1, 2) + MPoly::sym_monomial(2, 1, -4, 1, 2)
            + MPoly::sym_monomial(2, -2, 0, 1, 0);
    auto cm = p.coeff_map();
    REQUIRE(cm.size() == 2);
    CHECK(cm.at({0}) == LaurentPoly(-2));
    CHECK(cm.at({2}) == LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(1, -4));
}

TEST_CASE("factored ratios evaluate like plain ratios") {
    MPoly q4 = MPoly::sym_monomial(2, 1, 4, 1, 0);       // q
    MPoly s4 = MPoly::sym_monomial(2, 1, 0, 1, 4);       // q^x
    MPoly f = q4 * s4 - MPoly(2, Rational(1));           // q^(x+1) - 1
    FactoredRat r(s4 + q4);
    r.mul_den_factor(f);
    r.mul_den_factor(f);
    for (int x = -3; x <= 3; ++x) {
        LaurentPoly fx = f.substitute({4 * x});
        RatFunc expect((s4 + q4).substitute({4 * x}), fx * fx);
        CHECK(r.eval({4 * x}) == expect);
    }
}

TEST_CASE("factored lcm and numerator completion") {
    MPoly s = MPoly::sym_monomial(2, 1, 0, 1, 1);
    MPoly f1 = s - MPoly(2, Rational(1)), f2 = s + MPoly(2, Rational(1));
    FactoredRat a(MPoly(2, Rational(1)));
    a.mul_den_factor(f1);
    FactoredRat b(MPoly(2, Rational(1)));
    b.mul_den_factor(f2);
    auto l = FactoredRat::lcm(a.den_factors(), b.den_factors());
    CHECK(l.size() == 2);
    // completed numerators over the common denominator reproduce the ratios
    MPoly na = a.num_over(l), nb = b.num_over(l);
    MPoly den(2, Rational(1));
    for (auto& [f, m] : l)
        for (int i = 0; i < m; ++i) den *= f;
    for (int x = -3; x <= 3; ++x) {
        if (x == 0) continue;  // u^x - 1 vanishes there
        RatFunc dv{den.substitute({x})};
        CHECK(RatFunc(na.substitute({x})) / dv == a.eval({x}));
        CHECK(RatFunc(nb.substitute({x})) / dv == b.eval({x}));
        CHECK(RatFunc((na + nb).substitute({x})) / dv == a.eval({x}) + b.eval({x}));
    }
}

}
