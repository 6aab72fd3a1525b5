#include "qholo/weyl.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qholo {

CoeffPoly coeff_mono(const Rational& c, int e_u, int j) {
    return MPoly::monomial(2, c, {e_u, j});
}

LaurentPoly coeff_eval(const CoeffPoly& c, int n) {
    if (c.nvars() != 2) throw std::invalid_argument("coeff_eval: expected (u, Q)");
    return c.substitute({4 * n});
}

namespace {

// one rational coefficient with sign split off, omitting "1" before symbols
void render_coeff(std::ostringstream& os, const Rational& c, bool lead,
                  bool has_symbol) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (lead) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || !has_symbol) {
        os << a.get_str();
        if (has_symbol) os << " ";
    }
}

}  // namespace

std::string coeff_str(const CoeffPoly& c) {
    if (c.is_zero()) return "0";
    // order terms by (Q-exponent, u-exponent)
    std::map<std::pair<int, int>, Rational> ordered;
    for (auto& [e, co] : c.terms()) ordered[{e[1], e[0]}] = co;
    std::ostringstream os;
    bool lead = true;
    for (auto& [key, co] : ordered) {
        auto [jq, eu] = key;
        bool has_symbol = eu != 0 || jq != 0;
        render_coeff(os, co, lead, has_symbol);
        lead = false;
        if (eu != 0) {
            if (eu % 4 == 0) {
                int e = eu / 4;
                os << "q";
                if (e != 1) os << "^" << (e < 0 ? "(" : "") << e << (e < 0 ? ")" : "");
            } else {
                // quarter-granular exponent rendered as a fraction of q
                int num = eu, den = 4;
                int g = num % 2 == 0 ? 2 : 1;
                num /= g;
                den /= g;
                os << "q^(" << num << "/" << den << ")";
            }
            if (jq != 0) os << " ";
        }
        if (jq != 0) {
            os << "Q";
            if (jq != 1) os << "^" << (jq < 0 ? "(" : "") << jq << (jq < 0 ? ")" : "");
        }
    }
    return os.str();
}

namespace {

// exponent after '^': integer, or parenthesized integer / fraction over 2
// or 4; returns the value scaled to u-units (denominator 1 -> times 4)
int parse_exponent(const std::string& s, size_t& i) {
    bool paren = i < s.size() && s[i] == '(';
    if (paren) ++i;
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("coeff_parse: missing exponent");
    int num = std::stoi(s.substr(start, i - start));
    int den = 1;
    if (paren && i < s.size() && s[i] == '/') {
        ++i;
        size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        den = std::stoi(s.substr(dstart, i - dstart));
        if (den != 2 && den != 4)
            throw std::invalid_argument("coeff_parse: exponent denominator");
    }
    if (paren) {
        if (i >= s.size() || s[i] != ')')
            throw std::invalid_argument("coeff_parse: unbalanced exponent");
        ++i;
    }
    return num * (4 / den);
}

}  // namespace

CoeffPoly coeff_parse(const std::string& text) {
    CoeffPoly out(2);
    const std::string& s = text;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip();
    if (i >= s.size()) throw std::invalid_argument("coeff_parse: empty input");
    bool first = true;
    while (i < s.size()) {
        skip();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("coeff_parse: expected + or -");
        }
        first = false;
        // optional rational magnitude
        Rational mag(1);
        bool any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            any = true;
            size_t start = i;
            while (i < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
            mag = Rational(s.substr(start, i - start));
            mag.canonicalize();
            skip();
        }
        int eu = 0, jq = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            any = true;
            eu = 4;
            if (i < s.size() && s[i] == '^') {
                ++i;
                eu = parse_exponent(s, i);
            }
            skip();
        }
        if (i < s.size() && s[i] == 'Q') {
            ++i;
            any = true;
            jq = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                jq = parse_exponent(s, i) / 4;
            }
            skip();
        }
        if (!any) throw std::invalid_argument("coeff_parse: malformed term");
        if (mag == 0 && eu == 0 && jq == 0 && out.is_zero() && i >= s.size())
            return out;  // the rendering "0"
        out += coeff_mono(sign < 0 ? Rational(-mag) : mag, eu, jq);
    }
    return out;
}

WeylOperator WeylOperator::one(int npairs) {
    WeylOperator r(npairs);
    r.add_term(std::vector<int>(npairs, 0), MPoly(npairs + 1, Rational(1)));
    return r;
}

WeylOperator WeylOperator::E(int npairs, int var) {
    WeylOperator r(npairs);
    std::vector<int> e(npairs, 0);
    e[var] = 1;
    r.add_term(e, MPoly(npairs + 1, Rational(1)));
    return r;
}

WeylOperator WeylOperator::Q(int npairs, int var) {
    WeylOperator r(npairs);
    MPoly::Expo e(npairs + 1, 0);
    e[var + 1] = 1;
    r.add_term(std::vector<int>(npairs, 0), MPoly::monomial(npairs + 1, 1, e));
    return r;
}

WeylOperator WeylOperator::constant(const MPoly& coeff, int npairs) {
    WeylOperator r(npairs);
    r.add_term(std::vector<int>(npairs, 0), coeff);
    return r;
}

void WeylOperator::add_term(const std::vector<int>& epow, const MPoly& coeff) {
    if (static_cast<int>(epow.size()) != npairs_)
        throw std::invalid_argument("WeylOperator: bad E-exponent arity");
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(epow, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOperator WeylOperator::operator+(const WeylOperator& o) const {
    if (npairs_ != o.npairs_) throw std::invalid_argument("WeylOperator: arity mismatch");
    WeylOperator r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

WeylOperator WeylOperator::operator-(const WeylOperator& o) const {
    if (npairs_ != o.npairs_) throw std::invalid_argument("WeylOperator: arity mismatch");
    WeylOperator r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

WeylOperator WeylOperator::operator*(const WeylOperator& o) const {
    if (npairs_ != o.npairs_) throw std::invalid_argument("WeylOperator: arity mismatch");
    WeylOperator r(npairs_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            // E^{e1} c2 = (c2 with Q_i -> q^{e1_i} Q_i) E^{e1}
            MPoly moved = c2;
            for (int i = 0; i < npairs_; ++i)
                if (e1[i] != 0) moved = moved.shift_symbol(i + 1, 4 * e1[i]);
            std::vector<int> e(npairs_);
            for (int i = 0; i < npairs_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * moved);
        }
    return r;
}

RatFunc WeylOperator::apply(const Sequence& f, int n) const {
    if (npairs_ != 1) throw std::invalid_argument("WeylOperator::apply: one variable only");
    RatFunc total;
    for (auto& [e, c] : terms_) {
        auto it = f.find(n + e[0]);
        if (it == f.end())
            throw std::out_of_range("WeylOperator::apply: sequence missing at " +
                                    std::to_string(n + e[0]));
        total += RatFunc(c.substitute({4 * n})) * it->second;
    }
    return total;
}

std::string WeylOperator::str() const {
    if (npairs_ != 1) throw std::invalid_argument("WeylOperator::str: one variable only");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int b = it->first[0];
        const MPoly& c = it->second;
        if (!lead) os << " + ";
        lead = false;
        std::string cs = coeff_str(c);
        if (b == 0) {
            os << cs;
            continue;
        }
        if (c.is_monomial())
            os << (cs == "1" ? "" : cs + " ");
        else
            os << "(" << cs << ") ";
        os << "E";
        if (b != 1) os << "^" << b;
    }
    return os.str();
}

RatFunc Recurrence::apply(const Sequence& f, int n) const {
    RatFunc total;
    for (int i = 0; i <= order; ++i) {
        auto it = f.find(n + i);
        if (it == f.end())
            throw std::out_of_range("Recurrence::apply: sequence missing at " +
                                    std::to_string(n + i));
        total += RatFunc(coeff_eval(coeffs[i], n)) * it->second;
    }
    return total;
}

std::string Recurrence::str() const {
    WeylOperator op(1);
    for (int i = 0; i <= order; ++i) op.add_term({i}, coeffs[i]);
    return op.str();
}

bool verify_recurrence(const Recurrence& r, const Sequence& f, int n_lo, int n_hi) {
    if (r.coeffs.size() != static_cast<size_t>(r.order) + 1 ||
        r.coeffs.back().is_zero())
        throw std::invalid_argument("verify_recurrence: malformed recurrence");
    for (int n = n_lo; n <= n_hi; ++n) {
        RatFunc lhs = r.apply(f, n);
        RatFunc want = r.rhs ? r.rhs(n) : RatFunc::zero();
        if (lhs != want) return false;
    }
    return true;
}

}  // namespace qholo
