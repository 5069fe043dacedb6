#include "hallwc/laurent.hpp"

#include <sstream>

#include "hallwc/errors.hpp"

namespace hallwc {

std::string variable_name(Variable v) {
    switch (v) {
        case Variable::q: return "q";
        case Variable::u: return "u";
        case Variable::one_minus_u: return "(1-u)";
    }
    return "?";
}

LaurentPoly::LaurentPoly(const BigRational& c, Variable var) : var_(var) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms, Variable var) : var_(var) {
    for (auto& [e, c] : terms)
        if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exp, BigRational c, Variable var) {
    LaurentPoly p(var);
    if (!c.is_zero()) p.terms_.emplace(exp, std::move(c));
    return p;
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

BigRational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
    if (terms_.empty()) return 0;
    if (x.is_zero() && terms_.begin()->first < 0)
        throw PoleAtPoint("negative power evaluated at 0");
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * x.pow(e);
    return acc;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_)
        if (e != 0) r.terms_.emplace(e - 1, c * BigRational(e));
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::reflect_at_one() const {
    if (!is_polynomial()) throw std::invalid_argument("reflect_at_one needs a polynomial");
    // Horner in (1 - x).
    const LaurentPoly one_minus_x(Terms{{0, 1}, {1, -1}}, var_);
    LaurentPoly acc(var_);
    for (int e = degree(); e >= 0; --e) {
        acc *= one_minus_x;
        acc += LaurentPoly(coeff(e), var_);
    }
    return acc;
}

LaurentPoly LaurentPoly::reversed() const {
    if (!is_polynomial()) throw std::invalid_argument("reversed needs a polynomial");
    LaurentPoly r(var_);
    const int d = degree();
    for (const auto& [e, c] : terms_) r.terms_.emplace(d - e, c);
    return r;
}

void LaurentPoly::add_term(int exp, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Variable LaurentPoly::merged_var(const LaurentPoly& o) const {
    if (var_ == o.var_ || o.is_constant()) return var_;
    if (is_constant()) return o.var_;
    throw VariableMismatch("cannot combine polynomials in " + variable_name(var_) + " and " +
                           variable_name(o.var_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    var_ = merged_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    var_ = merged_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    Variable v = merged_var(o);
    LaurentPoly r(v);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return *this = std::move(r);
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(BigRational(1), var_);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const std::string x = variable_name(var_);
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << x;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("poly_divmod needs ordinary polynomials");
    LaurentPoly quot(b.var()), rem = a;
    const int db = b.degree();
    const BigRational lb = b.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const BigRational c = rem.leading_coeff() / lb;
        quot += LaurentPoly::monomial(shift, c, b.var());
        rem -= b.shift(shift) * c;
    }
    return {quot, rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading_coeff().inverse();
}

}  // namespace hallwc
