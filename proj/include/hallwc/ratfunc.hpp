/**
 * @file ratfunc.hpp
 * @brief Reduced univariate rational functions over Q.
 *
 * Canonical form: the denominator is an ordinary polynomial with nonzero
 * constant term (any power of the variable lives in the numerator), it is
 * coprime to the numerator, its leading coefficient is positive, and the
 * pair (num, den) has integer coefficients with overall content 1. Every
 * element of Q(x) has exactly one such representative, so equality is a
 * comparison of coefficient maps.
 */
#pragma once

#include <string>

#include "hallwc/laurent.hpp"

namespace hallwc {

class RatFunc {
public:
    RatFunc() : num_(Variable::q), den_(BigRational(1)) {}
    RatFunc(const BigRational& c, Variable var = Variable::q);  // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly num);                                     // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly num, LaurentPoly den);

    /// The variable itself.
    static RatFunc var(Variable v = Variable::q);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    Variable variable() const noexcept { return num_.var(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    RatFunc pow(int e) const;
    RatFunc derivative() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Text in the parser grammar; `parse_ratfunc(str())` reproduces *this.
    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class RfOp { add, sub, mul, div };
RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RfOp op);

/// True iff the reduced denominator does not vanish at 1.
bool regular_at_one(const RatFunc& f);
/// Value at x0; throws PoleAtPoint when f has a pole there.
BigRational eval_at(const RatFunc& f, const BigRational& x0);

/// Parses the ASCII grammar
///   expr := [+-] term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
///   factor := base ('^' [+-]int)?; base := int | var | '(' expr ')'
/// where var is one of q, u. Throws ParseError or DivisionByZero.
RatFunc parse_ratfunc(const std::string& text);

}  // namespace hallwc
