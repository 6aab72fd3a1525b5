#include "qholo/jones.hpp"

#include "qholo/qspecial.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qholo {

using qspecial::brace_falling;
using qspecial::qbinom;
using qspecial::qint;

LaurentPoly f_plus(int n1, int n2, int a, int b, int k) {
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly r = qbinom(b + k, k) * brace_falling(n1 - 1 + k - a, k);
    if (r.is_zero()) return r;
    // v-exponent -((n1-1-2a)(n2-1-2b)+k(k-1))/2, doubled in u-units
    int e_u = -((n1 - 1 - 2 * a) * (n2 - 1 - 2 * b) + k * (k - 1));
    r = r.shifted(e_u);
    return k % 2 == 0 ? r : -r;
}

LaurentPoly f_minus(int n1, int n2, int a, int b, int k) {
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly r = qbinom(a + k, k) * brace_falling(n2 - 1 + k - b, k);
    if (r.is_zero()) return r;
    int e_u = (n1 - 1 - 2 * a - 2 * k) * (n2 - 1 - 2 * b + 2 * k) + k * (k - 1);
    return r.shifted(e_u);
}

LaurentPoly b_entry(int sign, int n1, int n2, int a, int b, int c, int d) {
    if (c - b != a - d) return LaurentPoly::zero();
    if (sign > 0) return f_plus(n1, n2, a, b, c - b);
    // the displayed B_- entry names f_+ with third argument b-c; the reading
    // with f_- is the one that inverts B_+ (checked by test)
    return f_minus(n1, n2, a, b, b - c);
}

StateVector apply_crossing(const StateVector& s, int i, int sign,
                           std::vector<int>& colors) {
    const int m = static_cast<int>(colors.size());
    if (i < 1 || i > m - 1) throw std::out_of_range("apply_crossing: bad position");
    const int n1 = colors[i - 1], n2 = colors[i];
    StateVector out;
    for (auto& [idx, coeff] : s.entries) {
        const int a = idx[i - 1], b = idx[i];
        // nonzero entries: c = b + sign*k, d = a - sign*k with k >= 0
        int kmax = sign > 0 ? std::min(a, n2 - 1 - b) : std::min(b, n1 - 1 - a);
        for (int k = 0; k <= kmax; ++k) {
            int c = sign > 0 ? b + k : b - k;
            int d = sign > 0 ? a - k : a + k;
            LaurentPoly f = b_entry(sign, n1, n2, a, b, c, d);
            if (f.is_zero()) continue;
            std::vector<int> nidx = idx;
            nidx[i - 1] = c;
            nidx[i] = d;
            auto [it, fresh] = out.entries.try_emplace(nidx, LaurentPoly());
            it->second += f * coeff;
            if (it->second.is_zero()) out.entries.erase(it);
        }
    }
    std::swap(colors[i - 1], colors[i]);
    return out;
}

namespace {

// diagonal entry sum of tau(beta) K^{-1}; pin_first fixes a_1 = 0 and
// omits slot 1 from the K^{-1} weight (broken-strand convention)
LaurentPoly trace_sum(const BraidWord& b, const std::vector<int>& colors,
                      bool pin_first) {
    const int m = b.strands;
    std::vector<int> idx(m, 0);
    LaurentPoly total;
    while (true) {
        bool in_range = true;
        for (int i = 0; i < m; ++i)
            if (idx[i] >= colors[i]) { in_range = false; break; }
        if (in_range) {
            StateVector s;
            s.entries[idx] = LaurentPoly::one();
            std::vector<int> running = colors;
            for (int v : b.letters)
                s = apply_crossing(s, std::abs(v), v > 0 ? 1 : -1, running);
            auto it = s.entries.find(idx);
            if (it != s.entries.end()) {
                int w = 0;  // K^{-1} weight exponent in v-units
                for (int i = pin_first ? 1 : 0; i < m; ++i)
                    w -= colors[i] - 2 * idx[i] - 1;
                total += it->second.shifted(2 * w);
            }
        }
        // advance multi-index; slot 0 stays 0 when pinned
        int i = pin_first ? 1 : 0;
        for (; i < m; ++i) {
            if (++idx[i] < colors[i]) break;
            idx[i] = 0;
        }
        if (i >= m) break;
    }
    return total;
}

int env_threads() {
    if (const char* s = std::getenv("QHOLO_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

LaurentPoly quantum_trace(const BraidWord& b, const std::vector<int>& cycle_colors) {
    ClosureInfo info = closure_info(b);
    if (static_cast<int>(cycle_colors.size()) != info.cycles)
        throw std::invalid_argument("quantum_trace: one color per closure cycle");
    // cycle id per bottom position, cycles ordered by smallest position
    std::vector<int> cyc(b.strands + 1, -1);
    int next = 0;
    for (int s = 1; s <= b.strands; ++s) {
        if (cyc[s] >= 0) continue;
        int t = s;
        while (cyc[t] < 0) {
            cyc[t] = next;
            t = info.permutation[t];
        }
        ++next;
    }
    std::vector<int> colors(b.strands);
    for (int s = 1; s <= b.strands; ++s) colors[s - 1] = cycle_colors[cyc[s]];
    return trace_sum(b, colors, false);
}

LaurentPoly broken_trace(const BraidWord& b, int n) {
    if (closure_info(b).cycles != 1)
        throw std::invalid_argument("broken_trace: closure is not a knot");
    if (n <= 0) return LaurentPoly::zero();
    return trace_sum(b, std::vector<int>(b.strands, n), true);
}

// Framing correction per unit of writhe: the broken trace of the writhe-1
// unknot [1] equals v^{-(n^2-1)/2}, so a positive crossing carries the
// twist factor v^{-(n^2-1)/2} and zero-framing multiplies by its inverse.
constexpr int FRAMING_SIGN = -1;

LaurentPoly jones(const BraidWord& b, int n, Normalization norm, bool mirror) {
    LaurentPoly value = broken_trace(b, n) * qint(n);
    if (norm != Normalization::framed && !value.is_zero()) {
        int w = closure_info(b).writhe;
        // undo t(n)^w, t(n) = v^{FRAMING_SIGN (n^2-1)/2}
        value = value.shifted(-FRAMING_SIGN * w * (n * n - 1));
    }
    if (norm == Normalization::long_knot && n >= 1)
        value = value.exact_div(qint(n));
    return mirror ? value.mirrored() : value;
}

std::vector<LaurentPoly> jones_range(const BraidWord& b, int n_lo, int n_hi,
                                     Normalization norm, bool mirror) {
    if (n_hi < n_lo) return {};
    std::vector<LaurentPoly> out(n_hi - n_lo + 1);
    int nthreads = std::min<int>(env_threads(), static_cast<int>(out.size()));
    if (nthreads <= 1) {
        for (int n = n_lo; n <= n_hi; ++n) out[n - n_lo] = jones(b, n, norm, mirror);
        return out;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (int n = n_lo + t; n <= n_hi; n += nthreads)
                out[n - n_lo] = jones(b, n, norm, mirror);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace qholo
