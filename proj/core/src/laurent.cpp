#include "qholo/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qholo {

namespace {

Rational canon(const Rational& c) {
    Rational r = c;
    r.canonicalize();
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = canon(c);
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e_u) {
    LaurentPoly p;
    if (c != 0) p.terms_[e_u] = canon(c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int e, const Rational& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = canon(c);
}

void LaurentPoly::prune(int e) {
    auto it = terms_.find(e);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    if (is_zero() || o.is_zero()) return r;
    // iterate over the smaller factor
    const LaurentPoly* a = this;
    const LaurentPoly* b = &o;
    if (a->terms_.size() > b->terms_.size()) std::swap(a, b);
    Rational tmp;
    for (auto& [ea, ca] : a->terms_) {
        for (auto& [eb, cb] : b->terms_) {
            tmp = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(ea + eb, tmp);
            if (!fresh) {
                it->second += tmp;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    Rational cc = canon(c);
    for (auto& [e, co] : terms_) r.terms_[e] = co * cc;
    return r;
}

LaurentPoly LaurentPoly::shifted(int e_u) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e + e_u] = c;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool LaurentPoly::try_exact_div(const LaurentPoly& o, LaurentPoly& quot) const {
    quot = LaurentPoly();
    if (o.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return true;
    // long division from the top; Laurent shifts keep this exact.  If the
    // division is exact the quotient's lowest exponent is min_shift.
    LaurentPoly rem = *this;
    const int od = o.max_exp();
    const Rational& olc = o.terms_.rbegin()->second;
    const int min_shift = min_exp() - o.min_exp();
    while (!rem.is_zero() && rem.max_exp() - od >= min_shift) {
        int shift = rem.max_exp() - od;
        Rational c = rem.terms_.rbegin()->second / olc;
        quot.terms_[shift] = c;
        rem -= o.scaled(c).shifted(shift);
    }
    if (!rem.is_zero()) {
        quot = LaurentPoly();
        return false;
    }
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
    LaurentPoly q;
    if (!try_exact_div(o, q))
        throw std::domain_error("LaurentPoly: inexact division");
    return q;
}

const Rational& LaurentPoly::leading_coeff() const {
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) return *this;
    return shifted(-min_exp()).scaled(1 / leading_coeff());
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    // Euclid over Q[u] after shifting min exponent to 0; exact since the
    // coefficient field is Q.  Result is unit-normalized (monic, min exp 0).
    LaurentPoly x = a.is_zero() ? a : a.shifted(-a.min_exp());
    LaurentPoly y = b.is_zero() ? b : b.shifted(-b.min_exp());
    while (!y.is_zero()) {
        // remainder of x by y
        LaurentPoly rem = x;
        const int od = y.max_exp();
        const Rational& olc = y.leading_coeff();
        while (!rem.is_zero() && rem.max_exp() >= od) {
            int shift = rem.max_exp() - od;
            Rational c = rem.leading_coeff() / olc;
            rem -= y.scaled(c).shifted(shift);
        }
        x = y;
        y = rem.is_zero() ? rem : rem.shifted(-rem.min_exp());
    }
    return x.unit_normalized();
}

Rational LaurentPoly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

bool LaurentPoly::is_integral_q() const {
    for (auto& [e, c] : terms_) {
        if (e % 4 != 0) return false;
        if (c.get_den() != 1) return false;
    }
    return true;
}

namespace {

// exponent e in u-units rendered over q: e/4 reduced
std::string exp_str(int e) {
    int g = std::gcd(std::abs(e), 4);
    int num = e / g, den = 4 / g;
    std::ostringstream os;
    if (den == 1) {
        if (num == 1) return "q";
        os << "q^" << (num < 0 ? "(" : "") << num << (num < 0 ? ")" : "");
    } else {
        os << "q^(" << num << "/" << den << ")";
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << exp_str(e);
        }
    }
    return os.str();
}

std::string LaurentPoly::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << e << ",\"" << c.get_num().get_str() << "\",\""
           << c.get_den().get_str() << "\"]";
    }
    os << "]";
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("LaurentPoly::parse: " + what + " at position " +
                                    std::to_string(i));
    }
    mpz_class integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return mpz_class(s.substr(start, i - start));
    }
    // exponent: integer, or (p/r) with r | 4, or (p) — result in u-units
    int exponent_u() {
        skip_ws();
        if (peek() == '(') {
            ++i;
            mpz_class num = integer();
            int den = 1;
            if (peek() == '/') {
                ++i;
                mpz_class d = integer();
                if (d <= 0) fail("exponent denominator must be positive");
                den = static_cast<int>(d.get_si());
            }
            if (peek() != ')') fail("expected ')'");
            ++i;
            if (4 % den != 0) fail("exponent denominator must divide 4");
            mpz_class e = num * (4 / den);
            return static_cast<int>(e.get_si());
        }
        mpz_class e = integer();
        return static_cast<int>(e.get_si()) * 4;
    }
    // term: [coeff] [* ] [q[^exp]]
    LaurentPoly term() {
        Rational c(1);
        bool saw_coeff = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpz_class num = integer();
            mpz_class den = 1;
            if (peek() == '/') {
                ++i;
                den = integer();
                if (den == 0) fail("zero denominator");
            }
            c = Rational(num, den);
            c.canonicalize();
            saw_coeff = true;
        }
        if (peek() == '*') ++i;
        skip_ws();
        if (i < s.size() && s[i] == 'q') {
            ++i;
            int e = 4;  // bare q
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = exponent_u();
            }
            return LaurentPoly::monomial(c, e);
        }
        if (!saw_coeff) fail("expected coefficient or q");
        return LaurentPoly::monomial(c, 0);
    }
    LaurentPoly parse() {
        LaurentPoly acc;
        bool neg = false;
        if (peek() == '+') ++i;
        else if (peek() == '-') { neg = true; ++i; }
        while (true) {
            LaurentPoly t = term();
            acc += neg ? -t : t;
            if (eof()) break;
            char op = peek();
            if (op == '+') { neg = false; ++i; }
            else if (op == '-') { neg = true; ++i; }
            else fail("expected '+' or '-'");
        }
        return acc;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("LaurentPoly::parse: empty input");
    LaurentPoly r = p.parse();
    return r;
}

}  // namespace qholo
