#include "hallwc/freewall.hpp"

#include <algorithm>
#include <numeric>

#include "hallwc/errors.hpp"
#include "hallwc/torus.hpp"

namespace hallwc {

FreeElem FreeElem::letter(const DimVector& b) { return word(Word{b}); }

FreeElem FreeElem::word(const Word& w, const BigRational& c) {
    FreeElem e;
    e.add_term(w, c);
    return e;
}

BigRational FreeElem::coeff(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void FreeElem::add_term(const Word& w, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeElem& FreeElem::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
    FreeElem out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, c * d);
        }
    return out;
}

std::string FreeElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        if (!first) s += cs[0] == '-' ? " - " : " + ";
        else if (cs[0] == '-') s += "-";
        if (cs[0] == '-') cs.erase(0, 1);
        first = false;
        s += cs;
        for (const auto& l : w) s += "*x" + l.str();
    }
    return s;
}

FreeElem commutator(const FreeElem& a, const FreeElem& b) { return a * b - b * a; }

FreeElem nested_bracket(const Word& letters) {
    if (letters.empty()) throw InvalidInput("bracket of no letters");
    FreeElem acc = FreeElem::letter(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) acc = commutator(acc, FreeElem::letter(letters[i]));
    return acc;
}

DimVector multidegree(const Word& w) {
    if (w.empty()) throw InvalidInput("multidegree of the empty word");
    DimVector d = DimVector::zero(w.front().size());
    for (const auto& l : w) d = d + l;
    return d;
}

FreeElem substitute(const Substitution& sub, const FreeElem& x) {
    FreeElem out;
    for (const auto& [w, c] : x.terms()) {
        FreeElem prod = FreeElem::word({}, c);
        for (const auto& l : w) {
            const auto it = sub.find(l);
            if (it == sub.end()) throw MissingEntry("substitution has no image for x" + l.str());
            prod = prod * it->second;
        }
        out += prod;
    }
    return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    Substitution out;
    for (const auto& [b, img] : inner) out.emplace(b, substitute(outer, img));
    return out;
}

Substitution identity_substitution(const DimVector& bound) {
    Substitution s;
    for (const auto& b : classes_below(bound)) s.emplace(b, FreeElem::letter(b));
    return s;
}

Substitution triangular_inverse(const Substitution& sub, const DimVector& bound) {
    Substitution inv;
    // classes_below lists smaller totals first, so every part is already done.
    for (const auto& b : classes_below(bound)) {
        const auto it = sub.find(b);
        if (it == sub.end()) throw MissingEntry("substitution has no image for x" + b.str());
        if (it->second.coeff(Word{b}) != BigRational(1))
            throw InvalidInput("substitution is not unitriangular at x" + b.str());
        FreeElem tail;
        for (const auto& [w, c] : it->second.terms())
            if (w.size() >= 2) tail.add_term(w, c);
        inv.emplace(b, FreeElem::letter(b) - substitute(inv, tail));
    }
    return inv;
}

namespace {

void check_bound(const DimVector& bound) {
    if (bound.is_zero()) throw InvalidInput("bound must be a nonzero class");
    if (bound.total() > kMaxFreeDegree)
        throw DegreeOverflow("bound " + bound.str() + " exceeds total degree " + std::to_string(kMaxFreeDegree));
}

void check_stability(const SlopeFunction& mu, const DimVector& bound) {
    if (mu.nvertices() != bound.size()) throw DimMismatch("stability does not match the bound");
}

template <class Weight>
Substitution graded_substitution(const SlopeFunction& mu, const DimVector& bound, const Weight& weight) {
    check_stability(mu, bound);
    Substitution s;
    for (const auto& a : classes_below(bound)) {
        FreeElem img;
        for (const auto& parts : fixed_slope_decomps(a, mu)) img.add_term(parts, weight(parts.size()));
        s.emplace(a, std::move(img));
    }
    return s;
}

}  // namespace

Substitution hop_substitution(const HopSpec& hop, const DimVector& bound) {
    check_bound(bound);
    check_stability(hop.wall, bound);
    check_stability(hop.side, bound);
    Substitution s;
    for (const auto& b : classes_below(bound)) {
        check_dominance(hop.wall, hop.side, b);
        FreeElem img;
        for (const auto& type : enumerate_hn_types(b, hop.side, hop.wall)) img.add_term(type, 1);
        s.emplace(b, std::move(img));
    }
    return s;
}

Substitution compose_hops(const std::vector<HopSpec>& hops, const DimVector& bound) {
    check_bound(bound);
    Substitution phi = identity_substitution(bound);
    for (const auto& hop : hops) {
        Substitution h = hop_substitution(hop, bound);
        if (hop.direction == HopDirection::from_wall) h = triangular_inverse(h, bound);
        phi = compose(phi, h);
    }
    return phi;
}

Substitution log_substitution(const SlopeFunction& mu, const DimVector& bound) {
    return graded_substitution(mu, bound, [](std::size_t k) {
        return BigRational(BigInt(k % 2 ? 1 : -1), BigInt(static_cast<unsigned long>(k)));
    });
}

Substitution exp_substitution(const SlopeFunction& mu, const DimVector& bound) {
    return graded_substitution(mu, bound, [](std::size_t k) {
        return BigRational(BigInt(1), factorial(static_cast<unsigned>(k)));
    });
}

CoeffTable table_of(const Substitution& sub) {
    CoeffTable t;
    for (const auto& [b, img] : sub)
        for (const auto& [w, c] : img.terms()) t.emplace(w, c);
    return t;
}

Substitution u_from_s(const Substitution& s, const SlopeFunction& start, const SlopeFunction& end,
                      const DimVector& bound) {
    return compose(exp_substitution(start, bound), compose(s, log_substitution(end, bound)));
}

Substitution s_from_u(const Substitution& u, const SlopeFunction& start, const SlopeFunction& end,
                      const DimVector& bound) {
    return compose(log_substitution(start, bound), compose(u, exp_substitution(end, bound)));
}

namespace {

struct SolveResult {
    std::vector<BigRational> x;
    int nullity = 0;
};

// Exact Gauss-Jordan elimination; free unknowns are zero.
SolveResult solve(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const BigRational inv = a[r][c].inverse();
        for (auto& v : a[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const BigRational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) throw NotLieElement("words are not in the span of nested brackets");
    SolveResult out{std::vector<BigRational>(cols), static_cast<int>(cols - pivots.size())};
    for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = b[i];
    return out;
}

}  // namespace

CommutatorForm utilde_from_u(const Substitution& u) {
    CommutatorForm form;
    for (const auto& [b, img] : u) {
        std::map<Word, FreeElem> by_letters;
        for (const auto& [w, c] : img.terms()) {
            Word key = w;
            std::sort(key.begin(), key.end());
            by_letters[key].add_term(w, c);
        }
        for (const auto& [key, part] : by_letters) {
            std::vector<Word> columns;
            Word perm = key;
            std::sort(perm.begin(), perm.end(), std::greater<>());
            do columns.push_back(perm);
            while (std::prev_permutation(perm.begin(), perm.end()));

            std::vector<FreeElem> expanded;
            for (const auto& c : columns) expanded.push_back(nested_bracket(c));
            // Rows: every ordering of the letters, in the same order as columns.
            std::vector<std::vector<BigRational>> a;
            std::vector<BigRational> rhs;
            for (const auto& w : columns) {
                std::vector<BigRational> row;
                for (const auto& e : expanded) row.push_back(e.coeff(w));
                a.push_back(std::move(row));
                rhs.push_back(part.coeff(w));
            }
            const SolveResult sol = solve(std::move(a), std::move(rhs));
            form.nullity[key] = sol.nullity;
            for (std::size_t i = 0; i < columns.size(); ++i)
                if (!sol.x[i].is_zero()) form.coeffs.emplace(columns[i], sol.x[i]);
        }
    }
    return form;
}

Substitution expand_commutator_form(const CommutatorForm& form, const DimVector& bound) {
    Substitution s;
    for (const auto& b : classes_below(bound)) s.emplace(b, FreeElem());
    for (const auto& [w, c] : form.coeffs) {
        const auto it = s.find(multidegree(w));
        if (it == s.end()) throw DegreeOverflow("bracket " + FreeElem::word(w).str() + " exceeds the bound");
        it->second += nested_bracket(w) * c;
    }
    return s;
}

CoeffTables wall_crossing_tables(const std::vector<HopSpec>& hops, const DimVector& bound) {
    check_bound(bound);
    CoeffTables t;
    t.bound = bound;
    const Substitution s = compose_hops(hops, bound);
    t.S = table_of(s);
    if (hops.empty()) {
        t.U = t.S;
        CommutatorForm f = utilde_from_u(s);
        t.Utilde = std::move(f.coeffs);
        t.utilde_nullity = std::move(f.nullity);
        return t;
    }
    const Substitution u = u_from_s(s, hops.front().start(), hops.back().end(), bound);
    t.U = table_of(u);
    CommutatorForm f = utilde_from_u(u);
    if (expand_commutator_form(f, bound) != u)
        throw NotLieElement("commutator form does not re-expand to U");
    t.Utilde = std::move(f.coeffs);
    t.utilde_nullity = std::move(f.nullity);
    return t;
}

bool js_step4_identity(int n, const std::vector<long>& lambda) {
    if (n < 1 || lambda.size() != static_cast<std::size_t>(n))
        throw InvalidInput("need n >= 1 and one weight per index");
    BigRational lhs = 0, total = 0;
    for (int p = 1; p <= n; ++p) {
        BigRational inner = 0;
        for (int k = p; k <= n; ++k) {
            const BigRational term(binomial(k - 1, p - 1),
                                   factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k)));
            inner += (k - p) % 2 ? -term : term;
        }
        lhs += inner * BigRational(lambda[static_cast<std::size_t>(p - 1)]);
        total += BigRational(lambda[static_cast<std::size_t>(p - 1)]);
    }
    return lhs == total / BigRational(factorial(static_cast<unsigned>(n)));
}

bool js_bracket_expansion_check(int n, bool with_binomial) {
    if (n < 1 || n > 5) throw InvalidInput("bracket expansion check supports 1 <= n <= 5");
    const auto nn = static_cast<std::size_t>(n);
    Word symbols;
    for (std::size_t i = 0; i < nn; ++i) {
        DimVector e = DimVector::zero(nn);
        e.coords[i] = 1;
        symbols.push_back(e);
    }
    const BigRational inv_fact(BigInt(1), factorial(static_cast<unsigned>(n)));
    // Both sides are linear in lambda, so unit weights suffice.
    for (std::size_t target = 0; target < nn; ++target) {
        FreeElem lhs, rhs;
        std::vector<std::size_t> perm(nn);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Word w;
            for (auto i : perm) w.push_back(symbols[i]);
            if (perm.front() == target) lhs += nested_bracket(w) * (n % 2 ? inv_fact : -inv_fact);
            const auto p = static_cast<long>(std::find(perm.begin(), perm.end(), target) - perm.begin()) + 1;
            BigRational c = (n - p) % 2 ? -inv_fact : inv_fact;
            if (with_binomial) c *= BigRational(binomial(n - 1, p - 1));
            rhs.add_term(w, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace hallwc
