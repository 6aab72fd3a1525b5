#pragma once

/**
 * @file braid.hpp
 * @brief Braid words, closure combinatorics, and angle-variable labeling.
 *
 * Crossings are numbered by letter position (0-based).  Generator sigma_i
 * acts on strand positions (i, i+1), 1-based; the bottom position i is the
 * left input of the crossing and i+1 the right input.  Letters act bottom
 * to top.
 */

#include <map>
#include <string>
#include <vector>

namespace qholo {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  ///< signed generator indices, |idx| in [1, strands-1]
};

/// "[1,-2,1,-2]"; strand count inferred as max|index|+1 unless `strands`
/// is positive and at least that.  Throws std::invalid_argument.
BraidWord parse_braid(const std::string& text, int strands = 0);

/// preset lookup: "trefoil", "figure8", "twist:p" for integer p.
/// Returns false when `name` is not a preset.
bool braid_preset(const std::string& name, BraidWord& out);

struct ClosureInfo {
    std::vector<int> permutation;  ///< bottom position p -> top position, 1-based
    int cycles = 0;                ///< components of the closure link
    int writhe = 0;
};

ClosureInfo closure_info(const BraidWord& b);

/// Integer affine form constant + sum coeff_j * k_j in the angle variables,
/// one k_j per crossing.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(int c) : constant_(c) {}

    int constant() const { return constant_; }
    const std::map<int, int>& coeffs() const { return coeffs_; }

    void add_var(int j, int coeff);
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm scaled(int c) const;
    LinearForm shifted(int c) const;  ///< add a constant

    long eval(const std::vector<int>& k) const;
    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
    bool operator==(const LinearForm& o) const {
        return constant_ == o.constant_ && coeffs_ == o.coeffs_;
    }

    std::string str() const;

private:
    int constant_ = 0;
    std::map<int, int> coeffs_;  ///< crossing index -> nonzero coefficient
};

struct CrossingLabels {
    struct Crossing {
        int sign = 0;       ///< +1 or -1
        int pos = 0;        ///< generator index i, strand positions (i, i+1)
        LinearForm x;       ///< label entering at bottom position i (left input)
        LinearForm y;       ///< label entering at bottom position i+1 (right input)
    };
    std::vector<Crossing> crossings;     ///< one per letter, in word order
    std::vector<LinearForm> top;         ///< label at top of position p, index p-1
    int start_position = 1;              ///< broken strand bottom position (label 0)
};

/// Walk the closed-up diagram from the broken strand (bottom position 1,
/// label 0).  Left input at a positive crossing exits top-right carrying
/// entry - k_j; the right input exits top-left carrying entry + k_j.
/// Negative crossings flip both signs.  Requires knot closure.
CrossingLabels label_long_knot(const BraidWord& b);

}  // namespace qholo
