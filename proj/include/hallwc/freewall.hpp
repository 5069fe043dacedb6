/**
 * @file freewall.hpp
 * @brief Wall-crossing coefficients by composition in the free algebra.
 *
 * Symbols x_b are indexed by classes b. A substitution sends every symbol to
 * a combination of words of the same multidegree; composing the dominant
 * wall-crossing substitutions of a path gives the S coefficients, and
 * conjugating by the log/exp transforms gives U and its commutator form.
 */
#pragma once

#include <map>
#include <vector>

#include "hallwc/quiver.hpp"

namespace hallwc {

using Word = std::vector<DimVector>;

/// Largest bound total accepted by the table builders.
inline constexpr int kMaxFreeDegree = 10;

class FreeElem {
public:
    using Terms = std::map<Word, BigRational>;

    FreeElem() = default;
    static FreeElem letter(const DimVector& b);
    static FreeElem word(const Word& w, const BigRational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigRational coeff(const Word& w) const;
    void add_term(const Word& w, const BigRational& c);

    FreeElem& operator+=(const FreeElem& o);
    FreeElem& operator-=(const FreeElem& o);
    FreeElem& operator*=(const BigRational& c);
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
    friend FreeElem operator*(FreeElem a, const BigRational& c) { return a *= c; }
    /// Concatenation product.
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
    friend bool operator==(const FreeElem&, const FreeElem&) = default;

    std::string str() const;

private:
    Terms terms_;
};

FreeElem commutator(const FreeElem& a, const FreeElem& b);
/// [[...[x_1, x_2], ...], x_n].
FreeElem nested_bracket(const Word& letters);
/// Sum of the letters of a word.
DimVector multidegree(const Word& w);

/// Image of each symbol.
using Substitution = std::map<DimVector, FreeElem>;

/// Replaces every letter by its image (MissingEntry for letters without one).
FreeElem substitute(const Substitution& sub, const FreeElem& x);
/// Letterwise composition: x_b -> substitute(outer, inner(x_b)).
Substitution compose(const Substitution& outer, const Substitution& inner);
Substitution identity_substitution(const DimVector& bound);

/// Inverse of a substitution of the form x_b -> x_b + (words of length >= 2).
Substitution triangular_inverse(const Substitution& sub, const DimVector& bound);

enum class HopDirection {
    to_wall,    // from the side chamber onto the wall
    from_wall,  // from the wall into the side chamber
};

struct HopSpec {
    SlopeFunction wall;
    SlopeFunction side;
    HopDirection direction = HopDirection::to_wall;

    const SlopeFunction& start() const { return direction == HopDirection::to_wall ? side : wall; }
    const SlopeFunction& end() const { return direction == HopDirection::to_wall ? wall : side; }
};

/// x_b -> sum over HN_b(side/wall) of words; the wall deltas in terms of the
/// side deltas. Throws DominanceViolated.
Substitution hop_substitution(const HopSpec& hop, const DimVector& bound);

/// Expresses the end-stability deltas of a path in terms of its start
/// deltas. Throws DominanceViolated, DegreeOverflow, DimMismatch.
Substitution compose_hops(const std::vector<HopSpec>& hops, const DimVector& bound);

/// x_a -> sum over equal-slope decompositions of (-1)^{k-1}/k words.
Substitution log_substitution(const SlopeFunction& mu, const DimVector& bound);
/// x_a -> sum over equal-slope decompositions of 1/k! words.
Substitution exp_substitution(const SlopeFunction& mu, const DimVector& bound);

/// Coefficients by tuple, read from the image of x_{sum of the tuple}.
using CoeffTable = std::map<Word, BigRational>;
CoeffTable table_of(const Substitution& sub);

/// U = Exp_start after S after Log_end, applied letterwise.
Substitution u_from_s(const Substitution& s, const SlopeFunction& start, const SlopeFunction& end,
                      const DimVector& bound);
/// Inverse construction: S = Log_start after U after Exp_end.
Substitution s_from_u(const Substitution& u, const SlopeFunction& start, const SlopeFunction& end,
                      const DimVector& bound);

struct CommutatorForm {
    /// Coefficient of each nested bracket of the listed letters.
    CoeffTable coeffs;
    /// Dimension of the solution space per sorted letter multiset.
    std::map<Word, int> nullity;
};

/// Writes each U image in nested brackets. Columns are the distinct
/// orderings of each letter multiset in descending lexicographic order;
/// free unknowns are set to zero. Throws NotLieElement.
CommutatorForm utilde_from_u(const Substitution& u);
/// Re-expands a commutator form into ordinary words.
Substitution expand_commutator_form(const CommutatorForm& form, const DimVector& bound);

struct CoeffTables {
    CoeffTable S, U, Utilde;
    std::map<Word, int> utilde_nullity;
    DimVector bound;
};

CoeffTables wall_crossing_tables(const std::vector<HopSpec>& hops, const DimVector& bound);

/// sum_p lambda_p sum_{k>=p, k+l=n} (-1)^{k-p}/(k! l!) binom(k-1,p-1) == sum_p lambda_p / n!.
bool js_step4_identity(int n, const std::vector<long>& lambda);

/// Compares, for every weight lambda = e_i, the free-algebra expansion of
///   sum_orderings (-1)^{n-1}/n! lambda(a_1) [[...[x_1,x_2]...],x_n]
/// with sum_orderings sum_p c_{n,p} lambda(a_p) x_1...x_n, where
/// c_{n,p} = (-1)^{n-p} binom(n-1,p-1)/n!, or (-1)^{n-p}/n! when
/// `with_binomial` is false.
bool js_bracket_expansion_check(int n, bool with_binomial = true);

}  // namespace hallwc
