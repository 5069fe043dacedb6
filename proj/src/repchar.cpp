#include "hallwc/repchar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "hallwc/errors.hpp"
#include "hallwc/expr_parser.hpp"

namespace hallwc {

HighestWeight::HighestWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("highest weight needs at least one part");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
        throw NonDominant("weight parts must be non-increasing");
}

HighestWeight HighestWeight::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError("bad weight entry '" + item + "'", 0);
        }
    }
    return HighestWeight(std::move(parts));
}

bool HighestWeight::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

int HighestWeight::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Character::Character(MultiLaurent poly) : poly_(std::move(poly)) {
    std::vector<int> one_block{poly_.nvars()};
    if (!is_symmetric(poly_, one_block)) throw InvalidInput("character must be symmetric");
    weight_zero_ = poly_.is_weight_zero();
}

Character Character::constant(int n, const BigRational& c) {
    return Character(MultiLaurent::constant(n, c));
}

namespace {

// sum_{sigma in S_n} sgn(sigma) prod_i u_i^{e_{sigma(i)}}
MultiLaurent alternant(const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    MultiLaurent a(n);
    std::vector<int> perm(e.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Monomial m;
        for (std::size_t i = 0; i < perm.size(); ++i)
            m.exps[i] = e[static_cast<std::size_t>(perm[i])];
        a.add_term(m, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a;
}

}  // namespace

Character schur_char(const HighestWeight& lambda) {
    const int n = lambda.n();
    if (n > kMaxVars) throw SizeCap("schur_char supports at most " + std::to_string(kMaxVars) + " variables");
    std::vector<int> shifted(lambda.parts()), rho(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        shifted[static_cast<std::size_t>(j)] += n - 1 - j;
        rho[static_cast<std::size_t>(j)] = n - 1 - j;
    }
    return Character(divide_exact(alternant(shifted), alternant(rho)));
}

InvariantDim invariant_dim_ct(const Character& chi) {
    const BigRational ct = constant_term_of_product(gamma_minus(chi.n()), chi.poly());
    return {ct / BigRational(factorial(static_cast<unsigned>(chi.n()))), chi.weight_zero()};
}

std::vector<std::pair<HighestWeight, BigInt>> decompose(const Character& chi) {
    std::vector<std::pair<HighestWeight, BigInt>> out;
    MultiLaurent rest = chi.poly();
    const auto n = static_cast<std::size_t>(chi.n());
    while (!rest.is_zero()) {
        const auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                          [](const auto& a, const auto& b) { return a.first < b.first; });
        const BigRational mult = top->second;
        std::vector<int> parts(top->first.exps.begin(), top->first.exps.begin() + static_cast<long>(n));
        // The lex-largest monomial of a symmetric polynomial is dominant.
        HighestWeight lambda(parts);
        if (!mult.is_integer() || mult.sign() < 0)
            throw NotACharacter("multiplicity " + mult.str() + " of weight at peeling step");
        rest -= schur_char(lambda).poly() * mult;
        out.emplace_back(std::move(lambda), mult.num());
    }
    return out;
}

BigInt invariant_dim_peel(const Character& chi) {
    BigInt trivial = 0;
    for (const auto& [lambda, mult] : decompose(chi))
        if (lambda.is_zero()) trivial += mult;
    return trivial;
}

namespace {

// Values in the character parser carry no fixed rank until an s[...] atom
// appears; plain integers are promoted lazily.
struct CharValue {
    std::optional<MultiLaurent> poly;
    BigRational scalar = 0;  // used while poly is empty

    MultiLaurent as_poly(int n) const { return poly ? *poly : MultiLaurent::constant(n, scalar); }
};

struct CharacterRing {
    CharValue from_int(const BigInt& v) { return CharValue{std::nullopt, BigRational(v)}; }

    static int rank_of(const CharValue& a, const CharValue& b) {
        if (a.poly && b.poly && a.poly->nvars() != b.poly->nvars())
            throw VarCountMismatch("Schur words of different rank in one expression");
        return a.poly ? a.poly->nvars() : (b.poly ? b.poly->nvars() : 0);
    }

    CharValue combine(const CharValue& a, const CharValue& b, MlOp op) {
        const int n = rank_of(a, b);
        if (n == 0) {
            switch (op) {
                case MlOp::add: return {std::nullopt, a.scalar + b.scalar};
                case MlOp::sub: return {std::nullopt, a.scalar - b.scalar};
                case MlOp::mul: return {std::nullopt, a.scalar * b.scalar};
            }
        }
        return {ml_arith(a.as_poly(n), b.as_poly(n), op), 0};
    }

    CharValue add(const CharValue& a, const CharValue& b) { return combine(a, b, MlOp::add); }
    CharValue sub(const CharValue& a, const CharValue& b) { return combine(a, b, MlOp::sub); }
    CharValue mul(const CharValue& a, const CharValue& b) { return combine(a, b, MlOp::mul); }
    CharValue neg(const CharValue& a) {
        return a.poly ? CharValue{-*a.poly, 0} : CharValue{std::nullopt, -a.scalar};
    }
    CharValue div(const CharValue& a, const CharValue& b, std::size_t pos) {
        if (b.poly) throw ParseError("division by a character", pos);
        if (b.scalar.is_zero()) throw DivisionByZero("character divided by zero");
        return a.poly ? CharValue{*a.poly * b.scalar.inverse(), 0}
                      : CharValue{std::nullopt, a.scalar / b.scalar};
    }
    CharValue pow(const CharValue& a, long e, std::size_t pos) {
        if (e < 0) throw ParseError("negative power of a character", pos);
        if (!a.poly) return {std::nullopt, a.scalar.pow(e)};
        return {a.poly->pow(static_cast<unsigned>(e)), 0};
    }

    std::optional<CharValue> atom(std::string_view text, std::size_t& pos) {
        if (text[pos] != 's') return std::nullopt;
        std::size_t p = pos + 1;
        while (p < text.size() && text[p] == ' ') ++p;
        if (p >= text.size() || text[p] != '[') throw ParseError("expected '[' after s", p);
        const std::size_t close = text.find(']', p);
        if (close == std::string_view::npos) throw ParseError("unterminated weight", p);
        const HighestWeight lambda = HighestWeight::parse(std::string(text.substr(p + 1, close - p - 1)));
        pos = close + 1;
        return CharValue{schur_char(lambda).poly(), 0};
    }
};

}  // namespace

Character parse_character(const std::string& text) {
    CharacterRing ring;
    CharValue v = ExprParser<CharacterRing>(ring, text).parse();
    if (!v.poly) throw InvalidInput("character expression needs at least one s[...] term to fix the rank");
    return Character(std::move(*v.poly));
}

}  // namespace hallwc
