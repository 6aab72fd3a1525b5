#include "qholo/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qholo {

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_[Expo(nvars, 0)] = c;
}

MPoly MPoly::monomial(int nvars, const Rational& c, const Expo& e) {
    MPoly p(nvars);
    if (c != 0) p.terms_[e] = c;
    return p;
}

MPoly MPoly::sym_monomial(int nvars, const Rational& c, int e_u, int var, int e_s) {
    Expo e(nvars, 0);
    e[0] = e_u;
    if (e_s != 0) e.at(var) = e_s;
    return monomial(nvars, c, e);
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == Expo(nvars_, 0);
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    Expo e(nvars_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (auto& [e, co] : terms_) r.terms_[e] = co * c;
    return r;
}

bool MPoly::operator<(const MPoly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return terms_ < o.terms_;
}

LaurentPoly MPoly::substitute(const std::vector<int>& values) const {
    if (static_cast<int>(values.size()) != nvars_ - 1)
        throw std::invalid_argument("MPoly::substitute: wrong value count");
    LaurentPoly r;
    for (auto& [e, c] : terms_) {
        long ex = e[0];
        for (int v = 1; v < nvars_; ++v) ex += static_cast<long>(e[v]) * values[v - 1];
        r += LaurentPoly::monomial(c, static_cast<int>(ex));
    }
    return r;
}

MPoly MPoly::shift_symbol(int var, int du) const {
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        Expo ne = e;
        ne[0] += du * e[var];
        r.terms_[ne] = c;
    }
    return r;
}

std::pair<int, int> MPoly::var_range(int var) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first[var], hi = lo;
    for (auto& [e, c] : terms_) {
        lo = std::min(lo, e[var]);
        hi = std::max(hi, e[var]);
    }
    return {lo, hi};
}

std::map<MPoly::Expo, LaurentPoly> MPoly::coeff_map() const {
    std::map<Expo, LaurentPoly> r;
    for (auto& [e, c] : terms_) {
        Expo key(e.begin() + 1, e.end());
        r[key] += LaurentPoly::monomial(c, e[0]);
    }
    return r;
}

Rational MPoly::make_primitive() {
    if (terms_.empty()) return Rational(1);
    Rational lead = terms_.begin()->second;
    for (auto& [e, c] : terms_) c /= lead;
    return lead;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any = false;
        std::ostringstream mono;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (any) mono << "*";
            any = true;
            int g = std::gcd(std::abs(e[v]), 4);
            int num = e[v] / g, den = 4 / g;
            mono << names.at(v);
            if (den == 1 && num == 1) {
            } else if (den == 1) {
                mono << "^" << (num < 0 ? "(" : "") << num << (num < 0 ? ")" : "");
            } else {
                mono << "^(" << num << "/" << den << ")";
            }
        }
        if (!any) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

void FactoredRat::mul_den_factor(MPoly f) {
    if (f.is_zero()) throw std::domain_error("FactoredRat: zero denominator factor");
    Rational lead = f.make_primitive();
    num_ = num_.scaled(1 / lead);
    if (!f.is_one()) den_[f] += 1;
}

void FactoredRat::mul(const FactoredRat& o) {
    num_ *= o.num_;
    for (auto& [f, m] : o.den_) den_[f] += m;
}

std::map<MPoly, int> FactoredRat::lcm(const std::map<MPoly, int>& a,
                                      const std::map<MPoly, int>& b) {
    std::map<MPoly, int> r = a;
    for (auto& [f, m] : b) {
        auto it = r.find(f);
        if (it == r.end())
            r[f] = m;
        else
            it->second = std::max(it->second, m);
    }
    return r;
}

MPoly FactoredRat::num_over(const std::map<MPoly, int>& lcm_den) const {
    MPoly r = num_;
    for (auto& [f, m] : lcm_den) {
        auto it = den_.find(f);
        int have = it == den_.end() ? 0 : it->second;
        if (have > m)
            throw std::logic_error("FactoredRat::num_over: denominator not contained");
        for (int i = 0; i < m - have; ++i) r *= f;
    }
    return r;
}

RatFunc FactoredRat::eval(const std::vector<int>& values) const {
    LaurentPoly n = num_.substitute(values);
    LaurentPoly d = LaurentPoly::one();
    for (auto& [f, m] : den_) {
        LaurentPoly fv = f.substitute(values);
        for (int i = 0; i < m; ++i) d *= fv;
    }
    return RatFunc(n, d);
}

std::string FactoredRat::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "(" << num_.str(names) << ")";
    if (!den_.empty()) {
        os << " / (";
        bool first = true;
        for (auto& [f, m] : den_) {
            if (!first) os << " * ";
            first = false;
            os << "(" << f.str(names) << ")";
            if (m > 1) os << "^" << m;
        }
        os << ")";
    }
    return os.str();
}

}  // namespace qholo
