#include "qholo/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qholo {

BraidWord parse_braid(const std::string& text, int strands) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("parse_braid: " + what);
    };
    skip();
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    ++i;
    BraidWord b;
    skip();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip();
            size_t start = i;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) fail("expected integer");
            int v = std::atoi(text.substr(start, i - start).c_str());
            if (v == 0) fail("generator index zero invalid");
            b.letters.push_back(v);
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            fail("expected ',' or ']'");
        }
    }
    skip();
    if (i != text.size()) fail("trailing characters");
    int need = 1;
    for (int v : b.letters) need = std::max(need, std::abs(v) + 1);
    if (strands > 0 && strands < need) fail("strand count below max generator index");
    b.strands = std::max(strands, need);
    return b;
}

bool braid_preset(const std::string& name, BraidWord& out) {
    if (name == "trefoil") {
        out = parse_braid("[1,1,1]");
        return true;
    }
    if (name == "figure8") {
        out = parse_braid("[1,-2,1,-2]");
        return true;
    }
    if (name.rfind("twist:", 0) == 0) {
        const std::string arg = name.substr(6);
        char* end = nullptr;
        long p = std::strtol(arg.c_str(), &end, 10);
        if (end == arg.c_str() || *end != '\0') return false;
        switch (p) {
            case -1: return braid_preset("figure8", out);
            case 0: out = parse_braid("[1]"); return true;
            case 1: out = parse_braid("[1,1,1]"); return true;
            case 2: out = parse_braid("[1,1,1,2,-1,2]"); return true;
            default: return false;
        }
    }
    return false;
}

ClosureInfo closure_info(const BraidWord& b) {
    ClosureInfo info;
    // where[s] = current position of the strand that started at bottom s
    std::vector<int> where(b.strands + 1);
    for (int s = 1; s <= b.strands; ++s) where[s] = s;
    for (int v : b.letters) {
        int i = std::abs(v);
        for (int s = 1; s <= b.strands; ++s) {
            if (where[s] == i) where[s] = i + 1;
            else if (where[s] == i + 1) where[s] = i;
        }
        info.writhe += v > 0 ? 1 : -1;
    }
    info.permutation.assign(b.strands + 1, 0);
    for (int s = 1; s <= b.strands; ++s) info.permutation[s] = where[s];
    std::vector<bool> seen(b.strands + 1, false);
    for (int s = 1; s <= b.strands; ++s) {
        if (seen[s]) continue;
        ++info.cycles;
        int t = s;
        while (!seen[t]) {
            seen[t] = true;
            t = info.permutation[t];
        }
    }
    return info;
}

void LinearForm::add_var(int j, int coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(j, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm r = *this;
    r.constant_ += o.constant_;
    for (auto& [j, c] : o.coeffs_) r.add_var(j, c);
    return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
    LinearForm r = *this;
    r.constant_ -= o.constant_;
    for (auto& [j, c] : o.coeffs_) r.add_var(j, -c);
    return r;
}

LinearForm LinearForm::scaled(int c) const {
    LinearForm r;
    if (c == 0) return r;
    r.constant_ = constant_ * c;
    for (auto& [j, co] : coeffs_) r.coeffs_[j] = co * c;
    return r;
}

LinearForm LinearForm::shifted(int c) const {
    LinearForm r = *this;
    r.constant_ += c;
    return r;
}

long LinearForm::eval(const std::vector<int>& k) const {
    long v = constant_;
    for (auto& [j, c] : coeffs_) {
        if (j < 0 || j >= static_cast<int>(k.size()))
            throw std::out_of_range("LinearForm::eval: missing angle variable");
        v += static_cast<long>(c) * k[j];
    }
    return v;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [j, c] : coeffs_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << "k" << j + 1;
    }
    if (first) {
        os << constant_;
    } else if (constant_ != 0) {
        os << (constant_ < 0 ? " - " : " + ") << std::abs(constant_);
    }
    return os.str();
}

CrossingLabels label_long_knot(const BraidWord& b) {
    ClosureInfo info = closure_info(b);
    if (info.cycles != 1)
        throw std::invalid_argument("label_long_knot: closure is not a knot");
    CrossingLabels out;
    out.crossings.resize(b.letters.size());
    for (size_t j = 0; j < b.letters.size(); ++j) {
        out.crossings[j].sign = b.letters[j] > 0 ? 1 : -1;
        out.crossings[j].pos = std::abs(b.letters[j]);
    }
    out.top.assign(b.strands, LinearForm());
    out.start_position = 1;

    int pos = 1;
    LinearForm form;  // zero on the broken strand's incoming arc
    do {
        for (size_t j = 0; j < b.letters.size(); ++j) {
            int i = out.crossings[j].pos, sign = out.crossings[j].sign;
            if (pos == i) {
                out.crossings[j].x = form;
                form.add_var(static_cast<int>(j), -sign);
                pos = i + 1;
            } else if (pos == i + 1) {
                out.crossings[j].y = form;
                form.add_var(static_cast<int>(j), sign);
                pos = i;
            }
        }
        out.top[pos - 1] = form;
        // closure arc: top position p rejoins bottom position p
    } while (pos != 1);
    return out;
}

}  // namespace qholo
