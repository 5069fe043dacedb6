#pragma once

#include <string>
#include <vector>

#include "hallwc/multilaurent.hpp"

namespace hallwc {

/// Dominant integral weight of GL_n: non-increasing parts, negatives allowed.
class HighestWeight {
public:
    /// Throws NonDominant unless `parts` is non-increasing.
    explicit HighestWeight(std::vector<int> parts);
    /// Parses the CLI syntax "2,0,-2".
    static HighestWeight parse(const std::string& text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return static_cast<int>(parts_.size()); }
    bool is_zero() const;
    int degree() const;

private:
    std::vector<int> parts_;
};

/// Torus character of a (virtual) GL_n representation: a symmetric Laurent
/// polynomial. `weight_zero()` marks characters on which the centre acts
/// trivially, i.e. PGL_n-type characters.
class Character {
public:
    /// Throws InvalidInput if `poly` is not S_n-symmetric.
    explicit Character(MultiLaurent poly);
    static Character constant(int n, const BigRational& c);

    const MultiLaurent& poly() const noexcept { return poly_; }
    int n() const noexcept { return poly_.nvars(); }
    bool weight_zero() const noexcept { return weight_zero_; }

    Character operator+(const Character& o) const { return Character(poly_ + o.poly_); }
    Character operator-(const Character& o) const { return Character(poly_ - o.poly_); }
    Character operator*(const Character& o) const { return Character(poly_ * o.poly_); }
    Character operator*(const BigRational& c) const { return Character(poly_ * c); }
    Character pow(unsigned e) const { return Character(poly_.pow(e)); }

    friend bool operator==(const Character& a, const Character& b) { return a.poly_ == b.poly_; }

private:
    MultiLaurent poly_;
    bool weight_zero_;
};

/// Bialternant det(u_i^{lambda_j + n - j}) / det(u_i^{n - j}) by exact division.
Character schur_char(const HighestWeight& lambda);

struct InvariantDim {
    BigRational value;
    /// False when the input was not weight-zero; the value is still reported.
    bool weight_zero = true;
};

/// (1/n!) * constant_term(gamma_minus(n) * chi).
InvariantDim invariant_dim_ct(const Character& chi);

/// Multiplicity of the trivial representation found by peeling off Schur
/// characters at the lexicographically largest monomial until nothing is
/// left. Throws NotACharacter on a negative or fractional multiplicity.
BigInt invariant_dim_peel(const Character& chi);

/// Full irreducible decomposition produced by the peeling procedure.
std::vector<std::pair<HighestWeight, BigInt>> decompose(const Character& chi);

/// Evaluates a Schur-word expression such as "s[1,-1]^2 - 2*s[0,0]".
Character parse_character(const std::string& text);

}  // namespace hallwc
