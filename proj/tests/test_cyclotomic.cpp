#include "doctest.h"
#include "qholo/cyclotomic.hpp"
#include "qholo/hyper.hpp"
#include "qholo/jones.hpp"
#include "qholo/qspecial.hpp"

#include <stdexcept>

using namespace qholo;

namespace {

std::map<int, LaurentPoly> jones_table(const std::string& word, int N,
                                       bool mirror = false) {
    BraidWord b = parse_braid(word);
    std::map<int, LaurentPoly> J;
    for (int n = 1; n <= N; ++n)
        J[n] = jones(b, n, Normalization::zero_framed, mirror);
    return J;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("unknot transforms to the delta sequence") {
    std::map<int, LaurentPoly> J;
    for (int n = 1; n <= 6; ++n) J[n] = qspecial::qint(n);
    CycloSeq C = jones_to_cyclotomic(J, 6);
    CHECK(C.values.at(1).is_one());
    for (int n = 2; n <= 6; ++n) CHECK(C.values.at(n).is_zero());
    // and back: delta reconstructs [n]
    for (int n = 1; n <= 6; ++n)
        CHECK(cyclotomic_to_jones(C, n) == qspecial::qint(n));
}

TEST_CASE("figure-8 cyclotomic sequence is constant 1") {
    CycloSeq C = jones_to_cyclotomic(jones_table("[1,-2,1,-2]", 5), 5);
    for (int n = 1; n <= 5; ++n) CHECK(C.values.at(n).is_one());
}

TEST_CASE("trefoil cyclotomic sequence matches the closed form") {
    CycloSeq C = jones_to_cyclotomic(jones_table("[1,1,1]", 6), 6);
    for (int k = 1; k <= 6; ++k) {
        int n = k - 1;  // C(k) = c(1, k-1) = (-1)^n q^{n(n+3)/2}
        LaurentPoly e = LaurentPoly::u_power(2 * n * (n + 3));
        CHECK(C.values.at(k) == RatFunc(n % 2 ? -e : e));
    }
}

TEST_CASE("transform round trip on the trefoil") {
    auto J = jones_table("[1,1,1]", 8);
    CycloSeq C = jones_to_cyclotomic(J, 8);
    for (int n = 1; n <= 8; ++n) CHECK(cyclotomic_to_jones(C, n) == J.at(n));
}

TEST_CASE("constant-1 sequence reconstructs the figure-8 invariant") {
    CycloSeq C;
    C.provenance = "from-closed-form";
    for (int k = 1; k <= 6; ++k) C.values[k] = RatFunc::one();
    HyperTerm f8 = summand_family("figure8-jones");
    for (int n = 1; n <= 6; ++n)
        CHECK(RatFunc(cyclotomic_to_jones(C, n)) ==
              multisum(f8, n) * RatFunc(qspecial::qint(n)));
}

TEST_CASE("twist presets match the closed-form cyclotomic functions") {
    for (int p : {-1, 0, 1, 2}) {
        BraidWord b;
        REQUIRE(braid_preset("twist:" + std::to_string(p), b));
        std::map<int, LaurentPoly> J;
        for (int n = 1; n <= 5; ++n)
            J[n] = jones(b, n, Normalization::zero_framed);
        CycloSeq got = jones_to_cyclotomic(J, 5);
        CycloSeq want = twist_cyclotomic(p, 5);
        for (int k = 1; k <= 5; ++k) CHECK(got.values.at(k) == want.values.at(k));
    }
}

TEST_CASE("integrality checking") {
    CycloSeq C = jones_to_cyclotomic(jones_table("[1,1,1]", 8), 8);
    for (auto& [k, ok] : integrality_check(C)) CHECK(ok);
    CycloSeq f8 = jones_to_cyclotomic(jones_table("[1,-2,1,-2]", 5), 5);
    for (auto& [k, ok] : integrality_check(f8)) CHECK(ok);
    CycloSeq bad;
    bad.values[1] = RatFunc(LaurentPoly::one(),
                            LaurentPoly::one() - LaurentPoly::q_power(1));
    bad.values[2] = RatFunc(LaurentPoly::u_power(1));  // fractional q-power
    auto rep = integrality_check(bad);
    CHECK_FALSE(rep.at(1));
    CHECK_FALSE(rep.at(2));
}

TEST_CASE("missing data is an error") {
    std::map<int, LaurentPoly> J;
    J[1] = LaurentPoly::one();
    CHECK_THROWS_AS(jones_to_cyclotomic(J, 2), std::invalid_argument);
    CycloSeq C;
    C.values[1] = RatFunc::one();
    CHECK_THROWS_AS(cyclotomic_to_jones(C, 2), std::invalid_argument);
}

}
