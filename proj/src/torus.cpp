#include "hallwc/torus.hpp"

#include "hallwc/errors.hpp"

namespace hallwc {

namespace {

const RatFunc& q_minus_one() {
    static const RatFunc v = RatFunc::var(Variable::q) - RatFunc(BigRational(1));
    return v;
}

RatFunc q_power(int e) { return RatFunc(LaurentPoly::monomial(e, 1, Variable::q)); }

std::string decomposition_str(const Decomposition& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].str();
    return s + ")";
}

}  // namespace

TorusElem TorusElem::monomial(const DimVector& alpha, const RatFunc& c) {
    TorusElem e;
    e.add_term(alpha, c);
    return e;
}

RatFunc TorusElem::coeff(const DimVector& alpha) const {
    const auto it = terms_.find(alpha);
    return it == terms_.end() ? RatFunc() : it->second;
}

void TorusElem::add_term(const DimVector& alpha, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(alpha, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElem& TorusElem::operator+=(const TorusElem& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

TorusElem& TorusElem::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

TorusElem qt_mul(const TorusElem& x, const TorusElem& y, const EulerFormQ& chi) {
    TorusElem out;
    for (const auto& [a, f] : x.terms())
        for (const auto& [b, g] : y.terms())
            out.add_term(a + b, f * g * q_power(-chi(b, a)) / q_minus_one());
    return out;
}

RatFunc word_product(const std::vector<RatFunc>& coeffs, const Decomposition& parts, const EulerFormQ& chi) {
    if (coeffs.size() != parts.size()) throw DimMismatch("one coefficient per part required");
    RatFunc acc(BigRational(1));
    int twist = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (coeffs[j].is_zero()) return RatFunc();
        acc *= coeffs[j];
        for (std::size_t i = 0; i < j; ++i) twist -= chi(parts[j], parts[i]);
    }
    return acc * q_power(twist) / q_minus_one().pow(static_cast<int>(parts.size()) - 1);
}

const RatFunc& InvariantFamily::at(const DimVector& alpha) const {
    const auto it = table.find(alpha);
    if (it == table.end()) throw MissingEntry("no entry for class " + alpha.str());
    return it->second;
}

DeltaEngine::DeltaEngine(Quiver q, SlopeFunction mu) : q_(std::move(q)), mu_(std::move(mu)), chi_(q_) {
    if (!q_.is_acyclic()) throw NotAcyclic("stack invariants need an acyclic quiver");
    if (mu_.nvertices() != q_.nvertices()) throw DimMismatch("stability does not match the quiver");
}

const RatFunc& DeltaEngine::delta(const DimVector& alpha) {
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    q_.check_dim(alpha);
    if (alpha.is_zero()) throw InvalidInput("delta of the zero class");
    // Every HN type of length >= 2 has strictly smaller parts, so the
    // recursion terminates.
    RatFunc value = stack_poincare(q_, alpha, true);
    for (const auto& type : enumerate_hn_types(alpha, mu_)) {
        if (type.size() < 2) continue;
        std::vector<RatFunc> coeffs;
        coeffs.reserve(type.size());
        for (const auto& part : type) coeffs.push_back(delta(part));
        value -= word_product(coeffs, type, chi_);
    }
    return memo_.emplace(alpha, std::move(value)).first->second;
}

InvariantFamily DeltaEngine::family(const DimVector& bound) {
    q_.check_dim(bound);
    InvariantFamily fam{InvariantKind::delta, mu_, {}, chi_};
    for (const auto& a : classes_below(bound)) fam.table.emplace(a, delta(a));
    return fam;
}

TorusElem delta_semistable(const Quiver& q, const SlopeFunction& mu, const DimVector& alpha) {
    DeltaEngine engine(q, mu);
    return TorusElem::monomial(alpha, engine.delta(alpha));
}

TorusElem hn_sum(DeltaEngine& engine, const DimVector& alpha) {
    TorusElem total;
    for (const auto& type : enumerate_hn_types(alpha, engine.stability())) {
        TorusElem prod = TorusElem::monomial(type.front(), engine.delta(type.front()));
        for (std::size_t i = 1; i < type.size(); ++i)
            prod = qt_mul(prod, TorusElem::monomial(type[i], engine.delta(type[i])), engine.euler());
        total += prod;
    }
    return total;
}

namespace {

TorusElem convert(const InvariantFamily& fam, const DimVector& alpha, InvariantKind from) {
    if (fam.kind != from) throw InvalidInput("family has the wrong kind for this conversion");
    RatFunc value;
    for (const auto& parts : fixed_slope_decomps(alpha, fam.stability)) {
        const auto k = static_cast<long>(parts.size());
        std::vector<RatFunc> coeffs;
        for (const auto& p : parts) coeffs.push_back(fam.at(p));
        const BigRational w = from == InvariantKind::delta
                                  ? BigRational(BigInt(k % 2 ? 1 : -1), BigInt(k))
                                  : BigRational(BigInt(1), factorial(static_cast<unsigned>(k)));
        value += word_product(coeffs, parts, fam.chi) * RatFunc(w);
    }
    return TorusElem::monomial(alpha, value);
}

InvariantFamily convert_family(const InvariantFamily& fam, InvariantKind from, InvariantKind to) {
    InvariantFamily out{to, fam.stability, {}, fam.chi};
    for (const auto& [a, v] : fam.table) out.table.emplace(a, convert(fam, a, from).coeff(a));
    return out;
}

}  // namespace

TorusElem epsilon_from_delta(const InvariantFamily& fam, const DimVector& alpha) {
    return convert(fam, alpha, InvariantKind::delta);
}

TorusElem delta_from_epsilon(const InvariantFamily& fam, const DimVector& alpha) {
    return convert(fam, alpha, InvariantKind::epsilon);
}

InvariantFamily epsilon_family(const InvariantFamily& delta) {
    return convert_family(delta, InvariantKind::delta, InvariantKind::epsilon);
}

InvariantFamily delta_family(const InvariantFamily& epsilon) {
    return convert_family(epsilon, InvariantKind::epsilon, InvariantKind::delta);
}

BigRational dt_extract(const InvariantFamily& fam, const DimVector& alpha) {
    if (fam.kind != InvariantKind::epsilon) throw InvalidInput("DT values are read from epsilon invariants");
    const RatFunc& e = fam.at(alpha);
    if (!regular_at_one(e)) throw PoleAtOne("epsilon of " + alpha.str() + " has a pole at q=1: " + e.str());
    return eval_at(e, BigRational(1));
}

void check_dominance(const SlopeFunction& wall, const SlopeFunction& side, const DimVector& alpha) {
    for (const auto& type : enumerate_hn_types(alpha, side))
        for (std::size_t i = 1; i < type.size(); ++i)
            if (slope_cmp(wall, type[i - 1], type[i]) < 0)
                throw DominanceViolated("HN type " + decomposition_str(type) +
                                        " increases in wall slope");
}

DominantCheck dominant_wc_check(const Quiver& q, const SlopeFunction& wall, const SlopeFunction& side,
                                const DimVector& alpha) {
    check_dominance(wall, side, alpha);
    DeltaEngine wall_engine(q, wall), side_engine(q, side);
    DominantCheck out;
    out.wall_side = wall_engine.delta(alpha);
    for (const auto& type : enumerate_hn_types(alpha, side, wall)) {
        std::vector<RatFunc> coeffs;
        for (const auto& p : type) coeffs.push_back(side_engine.delta(p));
        out.chamber_side += word_product(coeffs, type, side_engine.euler());
    }
    out.holds = out.wall_side == out.chamber_side;
    return out;
}

}  // namespace hallwc
