#include "hallwc/ratfunc.hpp"

#include <optional>
#include <vector>

#include "hallwc/errors.hpp"
#include "hallwc/expr_parser.hpp"

namespace hallwc {

namespace {

Variable pick_var(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.is_constant()) return den.var();
    if (den.is_constant() || den.var() == num.var()) return num.var();
    throw VariableMismatch("numerator in " + variable_name(num.var()) + ", denominator in " +
                           variable_name(den.var()));
}

}  // namespace

RatFunc::RatFunc(const BigRational& c, Variable var)
    : num_(c, var), den_(BigRational(1), var) {}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(BigRational(1), num_.var()) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFunc RatFunc::var(Variable v) { return RatFunc(LaurentPoly::monomial(1, 1, v)); }

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const Variable v = pick_var(num_, den_);
    if (num_.is_zero()) {
        num_ = LaurentPoly(v);
        den_ = LaurentPoly(BigRational(1), v);
        return;
    }
    LaurentPoly den = den_.with_var(v).shift(-den_.low_degree());
    LaurentPoly num = num_.with_var(v).shift(-den_.low_degree());
    const int num_low = num.low_degree();
    num = num.shift(-num_low);

    LaurentPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }

    // Joint primitive integer form.
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto* p : {&num, &den})
        for (const auto& [e, c] : p->terms()) {
            lcm_den = lcm(lcm_den, c.den());
            gcd_num = gcd(gcd_num, c.num());
        }
    BigRational scale(lcm_den, gcd_num);
    if (den.leading_coeff().sign() < 0) scale = -scale;
    num *= scale;
    den *= scale;

    num_ = num.shift(num_low);
    den_ = std::move(den);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("negative power of zero");
        return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.str();  // den is exactly 1 in canonical form
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RfOp op) {
    switch (op) {
        case RfOp::add: return a + b;
        case RfOp::sub: return a - b;
        case RfOp::mul: return a * b;
        case RfOp::div: return a / b;
    }
    throw std::invalid_argument("unknown op");
}

bool regular_at_one(const RatFunc& f) { return !f.den().eval(1).is_zero(); }

BigRational eval_at(const RatFunc& f, const BigRational& x0) {
    if (f.den().eval(x0).is_zero())
        throw PoleAtPoint("pole at " + x0.str() + " of " + f.str());
    return f.num().eval(x0) / f.den().eval(x0);
}

namespace {

struct RatFuncRing {
    std::optional<Variable> seen;

    RatFunc from_int(const BigInt& n) { return RatFunc(BigRational(n)); }
    RatFunc add(RatFunc a, const RatFunc& b) { return a + b; }
    RatFunc sub(RatFunc a, const RatFunc& b) { return a - b; }
    RatFunc mul(RatFunc a, const RatFunc& b) { return a * b; }
    RatFunc div(RatFunc a, const RatFunc& b, std::size_t) { return a / b; }
    RatFunc neg(const RatFunc& a) { return -a; }
    RatFunc pow(const RatFunc& a, long e, std::size_t) { return a.pow(static_cast<int>(e)); }

    std::optional<RatFunc> atom(std::string_view text, std::size_t& pos) {
        const char c = text[pos];
        if (c != 'q' && c != 'u') return std::nullopt;
        const Variable v = c == 'q' ? Variable::q : Variable::u;
        if (seen && *seen != v) throw ParseError("mixed variables", pos);
        seen = v;
        ++pos;
        return RatFunc::var(v);
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    RatFuncRing ring;
    RatFunc r = ExprParser<RatFuncRing>(ring, text).parse();
    if (r.is_constant() && ring.seen) {
        // Keep the tag of the variable the user wrote, e.g. "u/u".
        return RatFunc(r.num().with_var(*ring.seen), r.den().with_var(*ring.seen));
    }
    return r;
}

}  // namespace hallwc
