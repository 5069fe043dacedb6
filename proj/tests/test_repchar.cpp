#include <doctest.h>

#include <functional>
#include <random>

#include "hallwc/errors.hpp"
#include "hallwc/repchar.hpp"

using namespace hallwc;

namespace {

MultiLaurent mono(int n, std::vector<int> e, long c = 1) {
    e.resize(static_cast<std::size_t>(n), 0);
    return MultiLaurent::monomial(n, Monomial::from(e), BigRational(c));
}

Character s(std::vector<int> parts) { return schur_char(HighestWeight(std::move(parts))); }

// Non-increasing vectors of length n with entries in [lo, hi].
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

int sum(const std::vector<int>& v) {
    int t = 0;
    for (int x : v) t += x;
    return t;
}

// Weyl dimension formula, an oracle independent of the alternant division.
BigRational weyl_dimension(const std::vector<int>& l) {
    const int n = static_cast<int>(l.size());
    BigRational d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d *= BigRational(BigInt(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i),
                             BigInt(j - i));
    return d;
}

BigRational value_at_ones(const MultiLaurent& p) {
    BigRational acc = 0;
    for (const auto& [m, c] : p.terms()) acc += c;
    return acc;
}

}  // namespace

TEST_CASE("highest weights") {
    CHECK(HighestWeight::parse("2,0,-2").parts() == std::vector<int>{2, 0, -2});
    CHECK_THROWS_AS(HighestWeight::parse("0,1"), NonDominant);
    CHECK_THROWS_AS(HighestWeight::parse("1,x"), ParseError);
    CHECK(HighestWeight({0, 0}).is_zero());
    CHECK(HighestWeight({2, -1}).degree() == 1);
}

TEST_CASE("schur_char examples") {
    CHECK(s({0, 0, 0}).poly() == MultiLaurent::constant(3, 1));
    CHECK(s({1, 0}).poly() == mono(2, {1, 0}) + mono(2, {0, 1}));
    CHECK(s({1, -1}).poly() == mono(2, {1, -1}) + MultiLaurent::constant(2, 1) + mono(2, {-1, 1}));
    CHECK(s({1, -1}).weight_zero());
    CHECK_FALSE(s({1, 0}).weight_zero());
}

TEST_CASE("schur dimensions match the Weyl dimension formula") {
    for (int n = 1; n <= 4; ++n)
        dominant_weights(n, -2, 2, [&](const std::vector<int>& l) {
            CHECK(value_at_ones(s(l).poly()) == weyl_dimension(l));
        });
}

TEST_CASE("character validation") {
    CHECK_THROWS_AS(Character(mono(2, {1, 0})), InvalidInput);
}

TEST_CASE("invariant_dim_ct examples") {
    CHECK(invariant_dim_ct(Character::constant(2, 1)).value == 1);
    CHECK(invariant_dim_ct(s({1, -1})).value == 0);
    CHECK(invariant_dim_ct(s({1, -1}).pow(2)).value == 1);
    CHECK_FALSE(invariant_dim_ct(s({1, 0})).weight_zero);
}

TEST_CASE("peeling examples") {
    CHECK(invariant_dim_peel(Character::constant(3, 1)) == 1);
    CHECK(invariant_dim_peel(s({1, 0}) * s({0, -1})) == 1);
    CHECK(invariant_dim_peel(s({1, -1})) == 0);
    const auto dec = decompose(s({1, 0}) * s({0, -1}));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first.parts() == std::vector<int>{1, -1});
    CHECK(dec[1].first.is_zero());
    CHECK_THROWS_AS(invariant_dim_peel(s({1, -1}) - Character::constant(2, 2)), NotACharacter);
    CHECK_THROWS_AS(invariant_dim_peel(s({1, -1}) * BigRational(BigInt(1), BigInt(2))), NotACharacter);
}

TEST_CASE("Weyl lemma: constant term is n! exactly for the trivial weight") {
    for (int n = 1; n <= 4; ++n)
        dominant_weights(n, -3, 3, [&](const std::vector<int>& l) {
            if (sum(l) != 0) return;
            const BigRational ct = constant_term_of_product(gamma_minus(n), s(l).poly());
            const bool trivial = HighestWeight(l).is_zero();
            CHECK(ct == (trivial ? BigRational(factorial(static_cast<unsigned>(n))) : BigRational(0)));
        });
}

TEST_CASE("constant-term and peeling invariant dimensions agree") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Character> pool;
        dominant_weights(n, -2, 2, [&](const std::vector<int>& l) { pool.push_back(s(l)); });
        // Products of at most three Schur characters with total weight zero.
        int checked = 0;
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size(); ++j) {
                const Character p = pool[i] * pool[j];
                if (p.weight_zero()) {
                    CHECK(invariant_dim_ct(p).value == BigRational(invariant_dim_peel(p)));
                    ++checked;
                }
                if (n <= 2)
                    for (std::size_t k = j; k < pool.size(); ++k) {
                        const Character t = p * pool[k];
                        if (!t.weight_zero()) continue;
                        CHECK(invariant_dim_ct(t).value == BigRational(invariant_dim_peel(t)));
                        ++checked;
                    }
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("invariant dimensions agree on sampled triple products with entries up to 3") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<int>> ws;
        dominant_weights(n, -3, 3, [&](const std::vector<int>& l) { ws.push_back(l); });
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        int checked = 0;
        while (checked < (n == 4 ? 6 : 20)) {
            const auto& a = ws[pick(rng)];
            const auto& b = ws[pick(rng)];
            // Third factor chosen to make the total weight zero when possible.
            std::vector<int> c(static_cast<std::size_t>(n), 0);
            const int need = -(sum(a) + sum(b));
            if (need < -3 * n || need > 3 * n) continue;
            for (int i = 0, left = need; i < n; ++i) {
                const int v = left > 0 ? std::min(left, 3) : std::max(left, -3);
                c[static_cast<std::size_t>(i)] = v;
                left -= v;
            }
            std::sort(c.begin(), c.end(), std::greater<>());
            const Character t = s(a) * s(b) * s(c);
            REQUIRE(t.weight_zero());
            CHECK(invariant_dim_ct(t).value == BigRational(invariant_dim_peel(t)));
            ++checked;
        }
    }
}

TEST_CASE("products of Schur characters have nonnegative multiplicities") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::vector<int>> ws;
        dominant_weights(n, -2, 2, [&](const std::vector<int>& l) { ws.push_back(l); });
        for (std::size_t i = 0; i < ws.size(); i += 3)
            for (std::size_t j = i; j < ws.size(); j += 5)
                for (const auto& [lambda, mult] : decompose(s(ws[i]) * s(ws[j]))) CHECK(mult > 0);
    }
}

TEST_CASE("parse_character") {
    const Character c = parse_character("s[1,-1]^2 - 2*s[0,0]");
    CHECK(c == s({1, -1}).pow(2) - Character::constant(2, 2));
    CHECK_THROWS_AS(parse_character("3"), InvalidInput);
    CHECK_THROWS_AS(parse_character("s[1,-1] + s[0,0,0]"), VarCountMismatch);
    CHECK_THROWS_AS(parse_character("s[1,-1"), ParseError);
    CHECK_THROWS_AS(parse_character("s[0,1]"), NonDominant);
}
