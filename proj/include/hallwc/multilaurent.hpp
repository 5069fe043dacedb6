/**
 * @file multilaurent.hpp
 * @brief Sparse Laurent polynomials in u_1..u_n over Q.
 *
 * Monomials are fixed-length exponent arrays (at most kMaxVars variables,
 * unused slots are zero) stored in a hash map, so the constant term is a
 * single lookup. Also hosts the density prod_{i != j}(1 - u_i/u_j) and
 * Lambda_{-t} series of virtual sums of line characters.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hallwc/bigrational.hpp"

namespace hallwc {

inline constexpr int kMaxVars = 6;

struct Monomial {
    std::array<std::int32_t, kMaxVars> exps{};

    static Monomial unit(int var, std::int32_t power = 1);
    static Monomial from(std::span<const int> e);

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    int total_degree() const;
    bool is_one() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exps) h = (h ^ static_cast<std::uint32_t>(e)) * 0x100000001b3ULL;
        return h;
    }
};

class MultiLaurent {
public:
    using Terms = std::unordered_map<Monomial, BigRational, MonomialHash>;

    explicit MultiLaurent(int nvars);
    static MultiLaurent constant(int nvars, const BigRational& c);
    static MultiLaurent monomial(int nvars, const Monomial& m, const BigRational& c = 1);

    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigRational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const BigRational& c);

    /// Terms ordered lexicographically by exponent vector.
    std::vector<std::pair<Monomial, BigRational>> sorted_terms() const;
    /// True iff every monomial has total degree 0.
    bool is_weight_zero() const;

    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent& operator*=(const BigRational& c);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator*(MultiLaurent a, const BigRational& c) { return a *= c; }
    MultiLaurent operator-() const;
    MultiLaurent pow(unsigned e) const;

    /// Applies `new_index[i]` as the target slot of variable i.
    MultiLaurent rename(std::span<const int> new_index, int target_nvars) const;

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int nvars_;
    Terms terms_;
};

enum class MlOp { add, sub, mul };
MultiLaurent ml_arith(const MultiLaurent& a, const MultiLaurent& b, MlOp op);

/// Product that splits `a`'s terms across `jobs` threads. The result is
/// identical to the sequential product for every job count.
MultiLaurent ml_mul_parallel(const MultiLaurent& a, const MultiLaurent& b, unsigned jobs);

/// Exact quotient a/b; throws NotExact when b does not divide a.
MultiLaurent divide_exact(const MultiLaurent& a, const MultiLaurent& b);

BigRational constant_term(const MultiLaurent& p);
/// Constant term of a*b without forming the product.
BigRational constant_term_of_product(const MultiLaurent& a, const MultiLaurent& b);

/// prod_{i != j} (1 - u_i/u_j), fully expanded. n <= kMaxVars (SizeCap).
const MultiLaurent& gamma_minus(int n);

/// Sum of line characters with signs; the zero class is the empty list.
struct VirtualLineSum {
    struct Line {
        Monomial weight;
        int sign = 1;  // +1 or -1
    };
    int nvars = 1;
    std::vector<Line> lines;

    int rank() const;
};

enum class LambdaDirection { t_zero, t_infinity };

/// Truncated expansion of prod (1 - t*m)^sign.
///
/// At t_zero, `coeffs[k]` is the coefficient of t^k for k = 0..order.
/// At t_infinity, `coeffs[k]` is the coefficient of t^(top_power - k), with
/// top_power the rank of the virtual sum.
struct LambdaSeries {
    LambdaDirection direction = LambdaDirection::t_zero;
    int top_power = 0;
    std::vector<MultiLaurent> coeffs;
};

LambdaSeries lambda_series(const VirtualLineSum& v, LambdaDirection direction, int order);

/// Places p's variables at `offset .. offset + p.nvars() - 1` of a
/// `target_nvars`-variable ring.
MultiLaurent block_embed(const MultiLaurent& p, int offset, int target_nvars);
/// Invariance under permutations within consecutive blocks of the given sizes.
bool is_symmetric(const MultiLaurent& p, std::span<const int> block_sizes);

}  // namespace hallwc
