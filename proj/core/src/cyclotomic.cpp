#include "qholo/cyclotomic.hpp"

#include "qholo/hyper.hpp"
#include "qholo/qspecial.hpp"

#include <stdexcept>

namespace qholo {

CycloSeq jones_to_cyclotomic(const std::map<int, LaurentPoly>& J, int N) {
    for (int k = 1; k <= N; ++k)
        if (!J.count(k))
            throw std::invalid_argument("jones_to_cyclotomic: J missing at " +
                                        std::to_string(k));
    CycloSeq out;
    out.provenance = "from-transform";
    for (int n = 1; n <= N; ++n) {
        RatFunc c;
        for (int k = 1; k <= n; ++k)
            c += qspecial::cyc_R(n, k) * RatFunc(J.at(k));
        out.values[n] = c;
    }
    return out;
}

LaurentPoly cyclotomic_to_jones(const CycloSeq& C, int n) {
    RatFunc j;
    for (int k = 1; k <= n; ++k) {
        auto it = C.values.find(k);
        if (it == C.values.end())
            throw std::invalid_argument("cyclotomic_to_jones: C missing at " +
                                        std::to_string(k));
        j += it->second * RatFunc(qspecial::cyc_S(n, k));
    }
    return j.as_poly();
}

std::map<int, bool> integrality_check(const CycloSeq& C) {
    std::map<int, bool> out;
    for (auto& [k, v] : C.values) out[k] = v.is_integral_q();
    return out;
}

CycloSeq twist_cyclotomic(int p, int N) {
    HyperTerm t = summand_family("twist:" + std::to_string(p));
    CycloSeq out;
    out.provenance = "from-closed-form";
    for (int k = 1; k <= N; ++k) out.values[k] = multisum(t, k - 1);
    return out;
}

}  // namespace qholo
