#include "qholo/qspecial.hpp"

#include <stdexcept>

namespace qholo::qspecial {

LaurentPoly brace(int n) {
    if (n == 0) return LaurentPoly::zero();
    return LaurentPoly::v_power(n) - LaurentPoly::v_power(-n);
}

LaurentPoly qint(int n) {
    // v^(n-1) + v^(n-3) + ... + v^(1-n), antisymmetric in n
    if (n == 0) return LaurentPoly::zero();
    bool neg = n < 0;
    int m = neg ? -n : n;
    LaurentPoly r;
    for (int e = 1 - m; e <= m - 1; e += 2) r += LaurentPoly::v_power(e);
    return neg ? -r : r;
}

LaurentPoly qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

LaurentPoly brace_fact(int n) {
    if (n < 0) throw std::invalid_argument("brace_fact: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (int i = 1; i <= n; ++i) r *= brace(i);
    return r;
}

LaurentPoly brace_falling(int n, int k) {
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly r = LaurentPoly::one();
    for (int i = 0; i < k; ++i) {
        if (n - i == 0) return LaurentPoly::zero();
        r *= brace(n - i);
    }
    return r;
}

LaurentPoly qbinom(int n, int k) {
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly num = brace_falling(n, k);
    if (num.is_zero()) return num;
    return num.exact_div(brace_fact(k));
}

LaurentPoly pochhammer(const LaurentPoly& base, const LaurentPoly& step, int count) {
    if (count < 0) throw std::invalid_argument("pochhammer: negative count");
    LaurentPoly r = LaurentPoly::one();
    LaurentPoly a = base;
    for (int i = 0; i < count; ++i) {
        r *= LaurentPoly::one() - a;
        a *= step;
    }
    return r;
}

LaurentPoly cyc_S(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("cyc_S: arguments must be >= 1");
    LaurentPoly num = brace_falling(n + k - 1, 2 * k - 1);
    if (num.is_zero()) return num;
    return num.exact_div(brace(1));
}

RatFunc cyc_R(int n, int k) {
    if (n < 1) throw std::invalid_argument("cyc_R: n must be >= 1");
    if (k > n) return RatFunc::zero();
    LaurentPoly num = brace(2 * k) * qbinom(2 * n, n - k);
    if ((n - k) % 2 != 0) num = -num;
    return RatFunc(num, brace_fact(2 * n - 1) * qint(2 * n));
}

}  // namespace qholo::qspecial
