/**
 * @file torus.hpp
 * @brief The motivic quantum torus of a quiver and invariants living in it.
 *
 * Products follow e^a * e^b = q^{-chi(b,a)}/(q-1) e^{a+b}. Stack invariants
 * use the rigidified normalization, so delta of a class under the trivial
 * stability is stack_poincare(Q, a, true).
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hallwc/quiver.hpp"

namespace hallwc {

/// Finitely supported map from classes to coefficients; zero values are dropped.
class TorusElem {
public:
    using Terms = std::map<DimVector, RatFunc>;

    TorusElem() = default;
    static TorusElem monomial(const DimVector& alpha, const RatFunc& c = RatFunc(BigRational(1)));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    RatFunc coeff(const DimVector& alpha) const;
    void add_term(const DimVector& alpha, const RatFunc& c);

    TorusElem& operator+=(const TorusElem& o);
    TorusElem& operator-=(const TorusElem& o);
    TorusElem& operator*=(const RatFunc& c);
    friend TorusElem operator+(TorusElem a, const TorusElem& b) { return a += b; }
    friend TorusElem operator-(TorusElem a, const TorusElem& b) { return a -= b; }
    friend TorusElem operator*(TorusElem a, const RatFunc& c) { return a *= c; }
    friend bool operator==(const TorusElem&, const TorusElem&) = default;

private:
    Terms terms_;
};

TorusElem qt_mul(const TorusElem& x, const TorusElem& y, const EulerFormQ& chi);

/// Coefficient of e^{sum parts} in c_1 e^{a_1} * ... * c_k e^{a_k}.
RatFunc word_product(const std::vector<RatFunc>& coeffs, const Decomposition& parts, const EulerFormQ& chi);

enum class InvariantKind { delta, epsilon };

struct InvariantFamily {
    InvariantKind kind = InvariantKind::delta;
    SlopeFunction stability;
    std::map<DimVector, RatFunc> table;
    EulerFormQ chi;

    const RatFunc& at(const DimVector& alpha) const;  // MissingEntry
};

/// Memoized delta invariants of semistable loci for one (quiver, stability).
/// Not synchronized: each engine belongs to one thread.
class DeltaEngine {
public:
    /// Throws NotAcyclic, DimMismatch.
    DeltaEngine(Quiver q, SlopeFunction mu);

    const Quiver& quiver() const noexcept { return q_; }
    const SlopeFunction& stability() const noexcept { return mu_; }
    const EulerFormQ& euler() const noexcept { return chi_; }

    const RatFunc& delta(const DimVector& alpha);
    /// Delta family on every nonzero class <= bound.
    InvariantFamily family(const DimVector& bound);

private:
    Quiver q_;
    SlopeFunction mu_;
    EulerFormQ chi_;
    std::map<DimVector, RatFunc> memo_;
};

TorusElem delta_semistable(const Quiver& q, const SlopeFunction& mu, const DimVector& alpha);

/// Sum over HN types of alpha of the delta products, multiplied out with qt_mul.
TorusElem hn_sum(DeltaEngine& engine, const DimVector& alpha);

TorusElem epsilon_from_delta(const InvariantFamily& fam, const DimVector& alpha);
TorusElem delta_from_epsilon(const InvariantFamily& fam, const DimVector& alpha);
/// Converts a whole family, class by class.
InvariantFamily epsilon_family(const InvariantFamily& delta);
InvariantFamily delta_family(const InvariantFamily& epsilon);

/// Value of an epsilon entry at q = 1. Throws PoleAtOne, MissingEntry, InvalidInput.
BigRational dt_extract(const InvariantFamily& fam, const DimVector& alpha);

struct DominantCheck {
    bool holds = false;
    RatFunc wall_side;   // delta under the wall stability
    RatFunc chamber_side;  // sum over HN(mu/mu0) of mu-delta products
};

/// Along every mu-HN type of alpha the mu0-slopes must weakly decrease.
/// Throws DominanceViolated naming the first offending type.
void check_dominance(const SlopeFunction& wall, const SlopeFunction& side, const DimVector& alpha);

/// Compares delta^{mu0}_alpha with the HN(mu/mu0) expansion in mu-deltas,
/// each side from its own engine.
DominantCheck dominant_wc_check(const Quiver& q, const SlopeFunction& wall, const SlopeFunction& side,
                                const DimVector& alpha);

}  // namespace hallwc
