// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hallwc/freewall.hpp"
#include "hallwc/khallvect.hpp"
#include "hallwc/repchar.hpp"
#include "hallwc/series.hpp"
#include "hallwc/torus.hpp"

using namespace hallwc;

namespace {

DimVector dv(std::vector<int> c) { return DimVector(std::move(c)); }
SlopeFunction theta(std::vector<int> t) {
    const std::size_t n = t.size();
    return SlopeFunction(std::move(t), std::vector<int>(n, 1));
}
RatFunc rf(const std::string& s) { return parse_ratfunc(s); }
Character schur(std::vector<int> parts) { return schur_char(HighestWeight(std::move(parts))); }

void dominant_weights(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int top) {
        if (static_cast<int>(cur.size()) == n) {
            f(cur);
            return;
        }
        for (int v = top; v >= lo; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(hi);
}

// Weight-zero products of at most two Schur characters with entries in [-2, 2].
std::vector<Character> spanning_set(int n) {
    std::vector<std::vector<int>> ws;
    dominant_weights(n, -2, 2, [&](const std::vector<int>& l) { ws.push_back(l); });
    std::vector<Character> schurs;
    for (const auto& w : ws) schurs.push_back(schur(w));
    std::vector<Character> out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (schurs[i].weight_zero()) out.push_back(schurs[i]);
        const int si = std::accumulate(ws[i].begin(), ws[i].end(), 0);
        for (std::size_t j = i; j < ws.size(); ++j)
            if (si + std::accumulate(ws[j].begin(), ws[j].end(), 0) == 0) out.push_back(schurs[i] * schurs[j]);
    }
    return out;
}

struct Setting {
    Quiver q;
    std::vector<SlopeFunction> stabilities;
    DimVector bound;
};

// Criterion 7's range: classes with total at most 4.
std::vector<Setting> stability_range() {
    return {{Quiver::vect(), {SlopeFunction({0}, {1}), SlopeFunction({1}, {2})}, dv({4})},
            {Quiver::a2(), {theta({1, 0}), theta({0, 1})}, dv({4, 4})},
            {Quiver::kronecker(), {theta({1, 0}), theta({0, 1})}, dv({4, 4})}};
}

std::vector<DimVector> small_classes(const DimVector& bound) {
    std::vector<DimVector> out;
    for (const auto& a : classes_below(bound))
        if (a.total() <= 4) out.push_back(a);
    return out;
}

bool vect_dt() {
    DeltaEngine e(Quiver::vect(), SlopeFunction::trivial(1));
    const InvariantFamily eps = epsilon_family(e.family(dv({6})));
    for (int n = 1; n <= 6; ++n)
        if (dt_extract(eps, dv({n})) != BigRational(BigInt(n % 2 ? 1 : -1), BigInt(n * n))) return false;
    return dt_extract(eps, dv({2})) == BigRational(BigInt(-1), BigInt(4));
}

bool vect_rank_two() {
    DeltaEngine e(Quiver::vect(), SlopeFunction::trivial(1));
    const InvariantFamily d = e.family(dv({2}));
    return epsilon_from_delta(d, dv({2})).coeff(dv({2})) == rf("-1/(2*q*(q+1))") &&
           d.at(dv({2})) == rf("1/(q*(q^2-1))");
}

bool khall_vanishing() {
    for (int n = 2; n <= 4; ++n)
        for (const auto& chi : spanning_set(n))
            if (!epsilon_eval(n, chi).is_zero()) return false;
    return true;
}

bool weyl_lemma() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        dominant_weights(n, -3, 3, [&](const std::vector<int>& l) {
            if (std::accumulate(l.begin(), l.end(), 0) != 0) return;
            const BigRational ct = constant_term_of_product(gamma_minus(n), schur(l).poly());
            const BigRational want = HighestWeight(l).is_zero() ? BigRational(factorial(static_cast<unsigned>(n))) : 0;
            ok = ok && ct == want;
        });
    return ok;
}

bool binomial_values() {
    // u + 1/u - 2 as a character of GL_2 evaluated on u = u_1/u_2.
    const Character base = schur({1, -1}) - Character::constant(2, 3);
    for (unsigned n = 0; n <= 8; ++n) {
        const BigInt b = binomial(2 * static_cast<long>(n) + 2, static_cast<long>(n) + 1);
        if (khall_product_eval(BlockProfile({1, 1}), base.pow(n)) != BigRational(n % 2 ? -b : b)) return false;
    }
    return true;
}

bool residue_agreement() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 4), pow_u(0, 3), pow_one(0, 3);
    const LaurentPoly one_minus_u(LaurentPoly::Terms{{0, 1}, {1, -1}}, Variable::u);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly num(Variable::u);
        const int d = deg(rng);
        for (int k = 0; k <= d; ++k) num += LaurentPoly::monomial(k, coef(rng), Variable::u);
        if (num.is_zero()) num = LaurentPoly(BigRational(1), Variable::u);
        const RatFunc f(num, LaurentPoly::monomial(pow_u(rng), 1, Variable::u) *
                                 one_minus_u.pow(static_cast<unsigned>(pow_one(rng))));
        if (!poles_within_zero_one_infinity(f)) return false;
        if (residue_via_expansions(f) != residue_via_principal_part(f)) return false;
    }
    return true;
}

bool stability_independence() {
    for (const auto& s : stability_range()) {
        std::vector<DeltaEngine> engines;
        for (const auto& mu : s.stabilities) engines.emplace_back(s.q, mu);
        for (const auto& a : small_classes(s.bound)) {
            const TorusElem want = TorusElem::monomial(a, stack_poincare(s.q, a, true));
            for (auto& e : engines)
                if (hn_sum(e, a) != want) return false;
        }
    }
    return true;
}

bool dominant_wall_crossing() {
    for (const Quiver& q : {Quiver::a2(), Quiver::kronecker()})
        for (const auto& side : {theta({1, 0}), theta({0, 1})})
            for (const auto& a : small_classes(dv({4, 4}))) {
                const DominantCheck c = dominant_wc_check(q, SlopeFunction::trivial(2), side, a);
                if (!c.holds || c.wall_side != c.chamber_side) return false;
            }
    return true;
}

bool simple_wall_commutator() {
    const DimVector a1 = dv({1, 0}), a2 = dv({0, 1}), a = dv({1, 1});
    for (int sign : {1, -1}) {
        const SlopeFunction side = sign > 0 ? theta({1, 0}) : theta({0, 1});
        const CoeffTables t =
            wall_crossing_tables({HopSpec{SlopeFunction::trivial(2), side, HopDirection::to_wall}}, a);
        const BigRational h(BigInt(sign), BigInt(2));
        CoeffTable nonzero;
        for (const auto& [w, c] : t.Utilde)
            if (!c.is_zero()) nonzero.emplace(w, c);
        const CoeffTable want{{{a1}, 1}, {{a2}, 1}, {{a}, 1}, {{a1, a2}, h}};
        if (nonzero != want) return false;
        if (t.U.at({a1, a2}) != h || t.U.at({a2, a1}) != -h) return false;
    }
    return true;
}

bool no_pole() {
    for (const auto& s : stability_range())
        for (const auto& mu : s.stabilities) {
            DeltaEngine e(s.q, mu);
            for (const auto& a : small_classes(s.bound))
                if (!regular_at_one(epsilon_from_delta(e.family(a), a).coeff(a))) return false;
        }
    return true;
}

bool step_four() {
    std::mt19937 rng(6);
    std::uniform_int_distribution<long> l(1, 10);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 50; ++t) {
            std::vector<long> lambda(static_cast<std::size_t>(n));
            for (auto& x : lambda) x = l(rng);
            if (!js_step4_identity(n, lambda)) return false;
        }
    for (int n = 1; n <= 4; ++n)
        if (!js_bracket_expansion_check(n)) return false;
    return true;
}

bool algebra_laws() {
    const EulerFormQ chi(Quiver::kronecker(3));
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> c(0, 3), e(-3, 3);
    auto mono = [&] { return TorusElem::monomial(dv({c(rng), c(rng)}), RatFunc(LaurentPoly::monomial(e(rng), e(rng)))); };
    for (int i = 0; i < 100; ++i) {
        const TorusElem x = mono(), y = mono(), z = mono();
        if (qt_mul(qt_mul(x, y, chi), z, chi) != qt_mul(x, qt_mul(y, z, chi), chi)) return false;
    }
    for (const auto& ch : spanning_set(3)) {
        const BigRational triple = khall_product_eval(BlockProfile({1, 1, 1}), ch);
        if (khall_product_eval_blockwise(BlockProfile({1, 1, 1}), ch) != triple) return false;
        if (khall_product_eval(BlockProfile({2, 1}), ch) * BigRational(2) != triple) return false;
        if (khall_product_eval(BlockProfile({1, 2}), ch) * BigRational(2) != triple) return false;
    }
    for (const auto& s : stability_range())
        for (const auto& mu : s.stabilities) {
            DeltaEngine en(s.q, mu);
            const InvariantFamily d = en.family(s.q.nvertices() == 1 ? dv({4}) : dv({3, 3}));
            if (delta_family(epsilon_family(d)).table != d.table) return false;
        }
    return true;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"Vect DT_n = (-1)^(n-1)/n^2 for n = 1..6", vect_dt},
        {"Vect rank-two epsilon and delta coefficients", vect_rank_two},
        {"K-Hall epsilon_n vanishes for n = 2, 3, 4 on the spanning set", khall_vanishing},
        {"Weyl constant-term lemma for n <= 4, entries in [-3, 3]", weyl_lemma},
        {"binomial values of the (1,1) product for N <= 8", binomial_values},
        {"residue routes agree on 200 random functions", residue_agreement},
        {"HN sums are stability-independent", stability_independence},
        {"dominant wall-crossing on A2 and Kronecker simple walls", dominant_wall_crossing},
        {"simple-wall commutator coefficient is +-1/2", simple_wall_commutator},
        {"epsilon invariants are regular at q = 1", no_pole},
        {"step-4 identity and bracket expansion", step_four},
        {"torus associativity, K-Hall block associativity, log/exp roundtrip", algebra_laws},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criteria[i].second();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu. %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    note.c_str());
        failures += !ok;
    }
    return failures ? 1 : 0;
}
