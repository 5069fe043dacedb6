#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallwc/ratfunc.hpp"

namespace hallwc {

/// Nonnegative integer vector indexed by quiver vertices.
struct DimVector {
    std::vector<int> coords;

    DimVector() = default;
    explicit DimVector(std::vector<int> c) : coords(std::move(c)) {}
    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }
    /// Parses "1,2,0".
    static DimVector parse(const std::string& text);

    std::size_t size() const noexcept { return coords.size(); }
    bool is_zero() const;
    int total() const;
    /// Componentwise <=.
    bool fits_in(const DimVector& bound) const;

    DimVector operator+(const DimVector& o) const;
    DimVector operator-(const DimVector& o) const;

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    std::string str() const;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;  // (source, target) vertex indices

    /// Validates arrow endpoints (InvalidInput).
    Quiver(std::vector<std::string> v, std::vector<std::pair<int, int>> a);

    static Quiver vect();
    static Quiver a2();
    /// m arrows 1 -> 2.
    static Quiver kronecker(int m = 2);

    std::size_t nvertices() const noexcept { return vertices.size(); }
    bool is_acyclic() const;
    void check_dim(const DimVector& d) const;
};

/// chi(d, e) = sum_v d_v e_v - sum_{a: i -> j} d_i e_j as an integer matrix.
class EulerFormQ {
public:
    explicit EulerFormQ(const Quiver& q);
    int operator()(const DimVector& d, const DimVector& e) const;
    const std::vector<std::vector<int>>& matrix() const noexcept { return m_; }

private:
    std::vector<std::vector<int>> m_;
};

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// mu(d) = theta.d / kappa.d, with optional tie-breaking tiers compared
/// lexicographically after the primary slope.
struct SlopeFunction {
    struct Tier {
        std::vector<int> theta;
        std::vector<int> kappa;
        friend bool operator==(const Tier&, const Tier&) = default;
    };
    std::vector<Tier> tiers;  // tiers[0] is the primary slope

    SlopeFunction() = default;
    SlopeFunction(std::vector<int> theta, std::vector<int> kappa, std::vector<Tier> extra = {});
    /// All slopes equal.
    static SlopeFunction trivial(std::size_t nvertices);

    std::size_t nvertices() const;
    /// Exact slope of the primary tier.
    BigRational slope(const DimVector& d) const;

    friend bool operator==(const SlopeFunction&, const SlopeFunction&) = default;
    std::string str() const;
};

/// Sign of mu(d) - mu(e) by integer cross multiplication, tier by tier.
std::strong_ordering slope_cmp(const SlopeFunction& mu, const DimVector& d, const DimVector& e);

/// Ordered decomposition of a class into nonzero parts.
using Decomposition = std::vector<DimVector>;

/// HN types of alpha under mu: parts with strictly decreasing slope. With
/// `same_slope_under`, only types whose parts all have the mu0-slope of alpha.
/// Parts are enumerated in lexicographic order of their coordinates.
std::vector<Decomposition> enumerate_hn_types(const DimVector& alpha, const SlopeFunction& mu,
                                              const std::optional<SlopeFunction>& same_slope_under = {});

/// Ordered decompositions of alpha whose parts all share alpha's slope.
std::vector<Decomposition> fixed_slope_decomps(const DimVector& alpha, const SlopeFunction& mu);

/// Every ordered decomposition of alpha (no slope condition).
std::vector<Decomposition> all_decomps(const DimVector& alpha);

/// Nonzero classes componentwise <= bound, ordered by total then lexicographically.
std::vector<DimVector> classes_below(const DimVector& bound);

/// P_q(GL_n) = prod_{i<n} (q^n - q^i).
LaurentPoly poincare_gl(int n);

/// q^{sum_{a: i->j} d_i d_j} / prod_v P_q(GL_{d_v}), times (q-1) when rigidified.
RatFunc stack_poincare(const Quiver& q, const DimVector& d, bool rigidified);

}  // namespace hallwc
