#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hallwc/bigrational.hpp"

namespace hallwc {

/// Name of the single variable a univariate object lives in. `one_minus_u`
/// is the local parameter (1-u) produced by expansions at u=1.
enum class Variable { q, u, one_minus_u };

std::string variable_name(Variable v);

/// Sparse univariate Laurent polynomial over the rationals.
///
/// No zero coefficients are stored; the empty map is the zero polynomial.
/// Binary operations require equal variable tags, except that a constant
/// adopts the tag of the other operand.
class LaurentPoly {
public:
    using Terms = std::map<int, BigRational>;

    LaurentPoly() = default;
    explicit LaurentPoly(Variable var) : var_(var) {}
    LaurentPoly(const BigRational& c, Variable var = Variable::q);
    LaurentPoly(Terms terms, Variable var = Variable::q);

    static LaurentPoly monomial(int exp, BigRational c = 1, Variable var = Variable::q);

    const Terms& terms() const noexcept { return terms_; }
    Variable var() const noexcept { return var_; }
    LaurentPoly with_var(Variable v) const { LaurentPoly r = *this; r.var_ = v; return r; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Polynomial in the ordinary sense: no negative exponents.
    bool is_polynomial() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }

    /// Highest / lowest exponent; 0 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int low_degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
    BigRational coeff(int exp) const;
    BigRational leading_coeff() const { return coeff(degree()); }

    BigRational eval(const BigRational& x) const;
    LaurentPoly derivative() const;
    /// Multiplies by x^k.
    LaurentPoly shift(int k) const;
    /// p(x) -> p(1 - x). Requires an ordinary polynomial.
    LaurentPoly reflect_at_one() const;
    /// p(x) -> x^deg p(1/x). Requires an ordinary polynomial.
    LaurentPoly reversed() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigRational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_ && (a.var_ == b.var_ || a.is_constant());
    }

    /// Rendered in the rational-function grammar, e.g. "2*q^2-q+1/3*q^-1".
    std::string str() const;

private:
    void add_term(int exp, const BigRational& c);
    Variable merged_var(const LaurentPoly& o) const;

    Terms terms_;
    Variable var_ = Variable::q;
};

/// Quotient and remainder of ordinary polynomials over Q.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of ordinary polynomials; zero only when both inputs are zero.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace hallwc
