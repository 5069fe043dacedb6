#include <doctest.h>

#include <random>

#include "hallwc/errors.hpp"
#include "hallwc/freewall.hpp"

using namespace hallwc;

namespace {

DimVector dv(std::vector<int> c) { return DimVector(std::move(c)); }
SlopeFunction theta(std::vector<int> t) {
    const std::size_t n = t.size();
    return SlopeFunction(std::move(t), std::vector<int>(n, 1));
}
BigRational half(int sign) { return BigRational(BigInt(sign), BigInt(2)); }

const DimVector e1 = dv({1, 0}), e2 = dv({0, 1});

HopSpec onto_wall(const SlopeFunction& side) { return {SlopeFunction::trivial(2), side, HopDirection::to_wall}; }
HopSpec off_wall(const SlopeFunction& side) { return {SlopeFunction::trivial(2), side, HopDirection::from_wall}; }

// Nonzero entries of a table.
CoeffTable support(const CoeffTable& t) {
    CoeffTable out;
    for (const auto& [w, c] : t)
        if (!c.is_zero()) out.emplace(w, c);
    return out;
}

CoeffTable identity_table(const DimVector& bound) {
    CoeffTable out;
    for (const auto& b : classes_below(bound)) out.emplace(Word{b}, 1);
    return out;
}

}  // namespace

TEST_CASE("free algebra basics") {
    const FreeElem x = FreeElem::letter(e1), y = FreeElem::letter(e2);
    CHECK((x * y).coeff({e1, e2}) == 1);
    CHECK(commutator(x, y) == FreeElem::word({e1, e2}) - FreeElem::word({e2, e1}));
    CHECK(nested_bracket({e1, e2}) == commutator(x, y));
    CHECK(nested_bracket({e1, e2, e1}) == commutator(commutator(x, y), x));
    CHECK(multidegree({e1, e2, e1}) == dv({2, 1}));
    CHECK((x - x).is_zero());
    CHECK(FreeElem::word({e1}, 0).is_zero());
}

TEST_CASE("hop substitution of a simple wall") {
    const Substitution minus = hop_substitution(onto_wall(theta({1, 0})), dv({1, 1}));
    CHECK(minus.at(dv({1, 1})) == FreeElem::letter(dv({1, 1})) + FreeElem::word({e1, e2}));
    CHECK(minus.at(e1) == FreeElem::letter(e1));
    const Substitution plus = hop_substitution(onto_wall(theta({0, 1})), dv({1, 1}));
    CHECK(plus.at(dv({1, 1})) == FreeElem::letter(dv({1, 1})) + FreeElem::word({e2, e1}));
}

TEST_CASE("simple wall tables on both sides") {
    const CoeffTables m = wall_crossing_tables({onto_wall(theta({1, 0}))}, dv({1, 1}));
    CHECK(m.S.at({e1, e2}) == 1);
    CHECK(support(m.S).count({e2, e1}) == 0);
    CHECK(m.U.at({e1, e2}) == half(1));
    CHECK(m.U.at({e2, e1}) == half(-1));
    CHECK(support(m.Utilde) == CoeffTable{{{e1}, 1}, {{e2}, 1}, {{dv({1, 1})}, 1}, {{e1, e2}, half(1)}});

    const CoeffTables p = wall_crossing_tables({onto_wall(theta({0, 1}))}, dv({1, 1}));
    CHECK(p.S.at({e2, e1}) == 1);
    CHECK(p.U.at({e2, e1}) == half(1));
    CHECK(p.U.at({e1, e2}) == half(-1));
    CHECK(support(p.Utilde).at({e1, e2}) == half(-1));
}

TEST_CASE("the empty path and cross-and-return give the identity") {
    const DimVector bound = dv({2, 2});
    const CoeffTables id = wall_crossing_tables({}, bound);
    CHECK(support(id.S) == identity_table(bound));
    CHECK(support(id.U) == identity_table(bound));
    CHECK(support(id.Utilde) == identity_table(bound));
    for (const auto& side : {theta({1, 0}), theta({0, 1})}) {
        const CoeffTables back = wall_crossing_tables({onto_wall(side), off_wall(side)}, bound);
        CHECK(support(back.S) == identity_table(bound));
        CHECK(support(back.U) == identity_table(bound));
    }
}

TEST_CASE("composed substitutions preserve multidegree") {
    const DimVector bound = dv({3, 2});
    const Substitution s = compose_hops({onto_wall(theta({1, 0})), off_wall(theta({0, 1}))}, bound);
    for (const auto& [b, img] : s)
        for (const auto& [w, c] : img.terms()) CHECK(multidegree(w) == b);
}

TEST_CASE("triangular inverse") {
    const DimVector bound = dv({2, 2});
    const Substitution h = hop_substitution(onto_wall(theta({1, 0})), bound);
    const Substitution inv = triangular_inverse(h, bound);
    CHECK(compose(h, inv) == identity_substitution(bound));
    CHECK(compose(inv, h) == identity_substitution(bound));
    const FreeElem x = FreeElem::letter(e1) * FreeElem::letter(dv({1, 1}));
    CHECK(substitute(inv, substitute(h, x)) == x);
}

TEST_CASE("S is recovered from U") {
    const DimVector bound = dv({2, 2});
    const SlopeFunction start = theta({1, 0}), end = theta({0, 1});
    const Substitution s = compose_hops({onto_wall(start), off_wall(end)}, bound);
    const Substitution u = u_from_s(s, start, end, bound);
    CHECK(s_from_u(u, start, end, bound) == s);
    const Substitution log_exp = compose(log_substitution(end, bound), exp_substitution(end, bound));
    CHECK(log_exp == identity_substitution(bound));
}

TEST_CASE("commutator form re-expands to U across two walls") {
    for (const auto& bound : {dv({2, 2}), dv({3, 1}), dv({1, 3})}) {
        const SlopeFunction start = theta({1, 0}), end = theta({0, 1});
        const Substitution s = compose_hops({onto_wall(start), off_wall(end)}, bound);
        const Substitution u = u_from_s(s, start, end, bound);
        const CommutatorForm form = utilde_from_u(u);
        CHECK(expand_commutator_form(form, bound) == u);
        const CoeffTables t = wall_crossing_tables({onto_wall(start), off_wall(end)}, bound);
        CHECK(t.U == table_of(u));
        for (const auto& [w, c] : t.S) CHECK((c == 0 || c == 1 || c == -1));
    }
}

TEST_CASE("non-Lie input is rejected") {
    Substitution bad = identity_substitution(dv({1, 1}));
    bad[dv({1, 1})] += FreeElem::word({e1, e2});
    CHECK_THROWS_AS(utilde_from_u(bad), NotLieElement);
}

TEST_CASE("path validation") {
    CHECK_THROWS_AS(compose_hops({onto_wall(theta({1, 0}))}, dv({6, 5})), DegreeOverflow);
    CHECK_THROWS_AS(compose_hops({HopSpec{theta({1, 0}), theta({0, 1}), HopDirection::to_wall}}, dv({1, 1})),
                    DominanceViolated);
    CHECK_THROWS_AS(compose_hops({onto_wall(theta({1, 0}))}, dv({1, 1, 1})), DimMismatch);
}

TEST_CASE("step-4 identity") {
    CHECK(js_step4_identity(1, {3}));
    CHECK(js_step4_identity(2, {2, 5}));
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> l(1, 10);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            std::vector<long> lambda(static_cast<std::size_t>(n));
            for (auto& x : lambda) x = l(rng);
            CHECK(js_step4_identity(n, lambda));
        }
    CHECK_THROWS_AS(js_step4_identity(2, {1}), InvalidInput);
}

TEST_CASE("bracket expansion") {
    for (int n = 1; n <= 5; ++n) CHECK(js_bracket_expansion_check(n));
    // The weights without the binomial factor agree only while it is 1.
    CHECK(js_bracket_expansion_check(2, false));
    CHECK_FALSE(js_bracket_expansion_check(3, false));
}
