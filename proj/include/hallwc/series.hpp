#pragma once

#include <string>
#include <vector>

#include "hallwc/ratfunc.hpp"

namespace hallwc {

enum class ExpansionPoint { zero, infinity, one };

std::string point_name(ExpansionPoint p);

inline constexpr int kDefaultExpansionOrder = 16;

/// Truncated Laurent expansion of a rational function around a point, in the
/// local parameter of that point: u at zero, v = 1/u at infinity and
/// w = 1 - u at one.
///
/// `coeffs[i]` is the coefficient of (local parameter)^(valuation + i) and
/// the window covers exponents valuation..order. A series vanishing to the
/// requested order has valuation = order + 1 and no coefficients.
struct SeriesWindow {
    ExpansionPoint point = ExpansionPoint::zero;
    int valuation = 0;
    std::vector<BigRational> coeffs;
    int order = 0;

    BigRational coeff(int exp) const;
    bool is_zero() const { return coeffs.empty(); }
    /// Exponent of u in the leading term (at infinity this is -valuation).
    int leading_u_exponent() const;

    friend bool operator==(const SeriesWindow&, const SeriesWindow&) = default;
};

SeriesWindow expand(const RatFunc& f, ExpansionPoint point, int order = kDefaultExpansionOrder);

/// True iff the reduced denominator is a unit times a power of (u - 1).
bool poles_within_zero_one_infinity(const RatFunc& f);

/// Exact finite Laurent polynomial in w = 1 - u equal to f.
/// Requires the denominator to be a unit times a power of (1 - u) and the
/// numerator to be an ordinary polynomial; anything else (including a power
/// of u in the denominator, whose (1-u)-series never terminates) raises
/// PoleElsewhere.
LaurentPoly as_one_laurent(const RatFunc& f);

/// Residue at u = 1 of u^-1 f(u) du computed as [u^0](f_minus - f_plus) from
/// the expansions at infinity and zero.
BigRational residue_via_expansions(const RatFunc& f);
/// Same residue from the principal part at u = 1: with u^-1 f = h/(u-1)^m and
/// h regular at 1, it is h^(m-1)(1)/(m-1)!.
BigRational residue_via_principal_part(const RatFunc& f);
/// Checks the poles lie in {0, 1, inf} (else PoleElsewhere), evaluates both
/// routes and insists they agree.
BigRational residue_at_one(const RatFunc& f);

}  // namespace hallwc
