#include "hallwc/series.hpp"

#include <stdexcept>

#include "hallwc/errors.hpp"

namespace hallwc {

std::string point_name(ExpansionPoint p) {
    switch (p) {
        case ExpansionPoint::zero: return "zero";
        case ExpansionPoint::infinity: return "infinity";
        case ExpansionPoint::one: return "one";
    }
    return "?";
}

BigRational SeriesWindow::coeff(int exp) const {
    if (exp < valuation || exp > order) return 0;
    const auto i = static_cast<std::size_t>(exp - valuation);
    return i < coeffs.size() ? coeffs[i] : BigRational(0);
}

int SeriesWindow::leading_u_exponent() const {
    switch (point) {
        case ExpansionPoint::zero: return valuation;
        case ExpansionPoint::infinity: return -valuation;
        case ExpansionPoint::one: break;
    }
    throw std::logic_error("leading_u_exponent is undefined at u=1");
}

namespace {

// num/den as a Laurent series in the variable of both polynomials.
SeriesWindow quotient_series(const LaurentPoly& num, const LaurentPoly& den, ExpansionPoint point,
                             int order) {
    SeriesWindow s;
    s.point = point;
    s.order = order;
    const int val = num.low_degree() - den.low_degree();
    if (num.is_zero() || val > order) {
        s.valuation = order + 1;
        return s;
    }
    s.valuation = val;
    const LaurentPoly a = num.shift(-num.low_degree());
    const LaurentPoly b = den.shift(-den.low_degree());
    const BigRational b0_inv = b.coeff(0).inverse();
    const auto n = static_cast<std::size_t>(order - val + 1);
    s.coeffs.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        BigRational acc = a.coeff(static_cast<int>(k));
        for (const auto& [e, c] : b.terms()) {
            if (e == 0) continue;
            if (static_cast<std::size_t>(e) > k) break;
            acc -= c * s.coeffs[k - static_cast<std::size_t>(e)];
        }
        s.coeffs[k] = acc * b0_inv;
    }
    return s;
}

// p(u) -> p(1/v), as a Laurent polynomial in v.
LaurentPoly invert_variable(const LaurentPoly& p) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : p.terms()) t.emplace(-e, c);
    return LaurentPoly(std::move(t), p.var());
}

}  // namespace

SeriesWindow expand(const RatFunc& f, ExpansionPoint point, int order) {
    switch (point) {
        case ExpansionPoint::zero:
            return quotient_series(f.num(), f.den(), point, order);
        case ExpansionPoint::infinity:
            return quotient_series(invert_variable(f.num()), invert_variable(f.den()), point, order);
        case ExpansionPoint::one: {
            // Clear negative powers so both sides are ordinary polynomials.
            const int lift = f.num().low_degree() < 0 ? -f.num().low_degree() : 0;
            const LaurentPoly n = f.num().shift(lift).reflect_at_one();
            const LaurentPoly d = f.den().shift(lift).reflect_at_one();
            return quotient_series(n, d, point, order);
        }
    }
    throw std::invalid_argument("unknown expansion point");
}

bool poles_within_zero_one_infinity(const RatFunc& f) {
    return f.den().reflect_at_one().terms().size() == 1;
}

LaurentPoly as_one_laurent(const RatFunc& f) {
    if (!poles_within_zero_one_infinity(f))
        throw PoleElsewhere("denominator " + f.den().str() + " is not a power of (1-u)");
    if (!f.num().is_polynomial())
        throw PoleElsewhere("power of u in the denominator: (1-u)-series does not terminate");
    const LaurentPoly d = f.den().reflect_at_one();  // c * w^b
    const auto& [b, c] = *d.terms().begin();
    return (f.num().reflect_at_one() * c.inverse()).shift(-b).with_var(Variable::one_minus_u);
}

BigRational residue_via_expansions(const RatFunc& f) {
    const BigRational plus = expand(f, ExpansionPoint::zero, 0).coeff(0);
    const BigRational minus = expand(f, ExpansionPoint::infinity, 0).coeff(0);
    return minus - plus;
}

BigRational residue_via_principal_part(const RatFunc& f) {
    // u^-1 f = num / (u * den); strip the (u-1) factors from den.
    const LaurentPoly u_minus_1(LaurentPoly::Terms{{0, -1}, {1, 1}}, f.num().var());
    LaurentPoly rest = f.den();
    int m = 0;
    while (rest.eval(1).is_zero()) {
        auto [quot, rem] = poly_divmod(rest, u_minus_1);
        if (!rem.is_zero()) throw std::logic_error("root at 1 without a linear factor");
        rest = std::move(quot);
        ++m;
    }
    if (m == 0) return 0;
    RatFunc h(f.num().shift(-1), rest);
    for (int k = 1; k < m; ++k) h = h.derivative();
    return eval_at(h, 1) / BigRational(factorial(static_cast<unsigned>(m - 1)));
}

BigRational residue_at_one(const RatFunc& f) {
    if (!poles_within_zero_one_infinity(f))
        throw PoleElsewhere("pole outside {0, 1, infinity} in " + f.str());
    BigRational a = residue_via_expansions(f);
    BigRational b = residue_via_principal_part(f);
    if (a != b)
        throw std::logic_error("residue routes disagree: " + a.str() + " vs " + b.str());
    return a;
}

}  // namespace hallwc
