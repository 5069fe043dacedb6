#include "hallwc/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hallwc/errors.hpp"

namespace hallwc {

DimVector DimVector::parse(const std::string& text) {
    std::vector<int> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            if (v < 0) throw InvalidInput("dimension vectors are nonnegative");
            c.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad dimension entry '" + item + "'", 0);
        }
    }
    if (c.empty()) throw ParseError("empty dimension vector", 0);
    return DimVector(std::move(c));
}

bool DimVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

int DimVector::total() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool DimVector::fits_in(const DimVector& bound) const {
    if (bound.size() != size()) throw DimMismatch("dimension vectors of different length");
    for (std::size_t i = 0; i < size(); ++i)
        if (coords[i] > bound.coords[i]) return false;
    return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
    if (o.size() != size()) throw DimMismatch("dimension vectors of different length");
    DimVector r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    if (o.size() != size()) throw DimMismatch("dimension vectors of different length");
    DimVector r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

std::string DimVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

Quiver::Quiver(std::vector<std::string> v, std::vector<std::pair<int, int>> a)
    : vertices(std::move(v)), arrows(std::move(a)) {
    if (vertices.empty()) throw InvalidInput("quiver needs at least one vertex");
    const int n = static_cast<int>(vertices.size());
    for (const auto& [s, t] : arrows)
        if (s < 0 || s >= n || t < 0 || t >= n) throw InvalidInput("arrow endpoint is not a vertex");
}

Quiver Quiver::vect() { return Quiver({"1"}, {}); }
Quiver Quiver::a2() { return Quiver({"1", "2"}, {{0, 1}}); }
Quiver Quiver::kronecker(int m) {
    return Quiver({"1", "2"}, std::vector<std::pair<int, int>>(static_cast<std::size_t>(m), {0, 1}));
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm.
    const std::size_t n = vertices.size();
    std::vector<int> indeg(n, 0);
    for (const auto& [s, t] : arrows) ++indeg[static_cast<std::size_t>(t)];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& [s, t] : arrows)
            if (static_cast<std::size_t>(s) == v && --indeg[static_cast<std::size_t>(t)] == 0)
                ready.push_back(static_cast<std::size_t>(t));
    }
    return seen == n;
}

void Quiver::check_dim(const DimVector& d) const {
    if (d.size() != vertices.size())
        throw DimMismatch("dimension vector " + d.str() + " does not match " +
                          std::to_string(vertices.size()) + " vertices");
}

EulerFormQ::EulerFormQ(const Quiver& q)
    : m_(q.nvertices(), std::vector<int>(q.nvertices(), 0)) {
    for (std::size_t v = 0; v < q.nvertices(); ++v) m_[v][v] = 1;
    for (const auto& [s, t] : q.arrows) m_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] -= 1;
}

int EulerFormQ::operator()(const DimVector& d, const DimVector& e) const {
    if (d.size() != m_.size() || e.size() != m_.size()) throw DimMismatch("Euler form dimension mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j) acc += d.coords[i] * m_[i][j] * e.coords[j];
    return acc;
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) { return EulerFormQ(q)(d, e); }

SlopeFunction::SlopeFunction(std::vector<int> theta, std::vector<int> kappa, std::vector<Tier> extra) {
    tiers.push_back({std::move(theta), std::move(kappa)});
    for (auto& t : extra) tiers.push_back(std::move(t));
    for (const auto& t : tiers) {
        if (t.theta.size() != tiers[0].theta.size() || t.kappa.size() != t.theta.size())
            throw DimMismatch("theta and kappa must have one entry per vertex");
        if (std::any_of(t.kappa.begin(), t.kappa.end(), [](int k) { return k <= 0; }))
            throw InvalidInput("kappa entries must be positive");
    }
}

SlopeFunction SlopeFunction::trivial(std::size_t nvertices) {
    return SlopeFunction(std::vector<int>(nvertices, 0), std::vector<int>(nvertices, 1));
}

std::size_t SlopeFunction::nvertices() const { return tiers.empty() ? 0 : tiers[0].theta.size(); }

namespace {

long long dot(const std::vector<int>& a, const DimVector& d) {
    if (a.size() != d.size()) throw DimMismatch("stability and dimension vector differ in length");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * d.coords[i];
    return s;
}

}  // namespace

BigRational SlopeFunction::slope(const DimVector& d) const {
    const long long den = dot(tiers.at(0).kappa, d);
    if (den == 0) throw ZeroDenominator("slope of the zero class");
    return BigRational(BigInt(static_cast<long>(dot(tiers[0].theta, d))), BigInt(static_cast<long>(den)));
}

std::string SlopeFunction::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < tiers.size(); ++k) {
        if (k) os << " | ";
        os << "theta=" << DimVector(tiers[k].theta).str() << " kappa=" << DimVector(tiers[k].kappa).str();
    }
    return os.str();
}

std::strong_ordering slope_cmp(const SlopeFunction& mu, const DimVector& d, const DimVector& e) {
    for (const auto& t : mu.tiers) {
        const long long kd = dot(t.kappa, d), ke = dot(t.kappa, e);
        if (kd <= 0 || ke <= 0) throw ZeroDenominator("slope of a class with kappa.d = 0");
        const long long lhs = dot(t.theta, d) * ke, rhs = dot(t.theta, e) * kd;
        if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

// Nonzero vectors <= bound in lexicographic order.
std::vector<DimVector> parts_below(const DimVector& bound) {
    std::vector<DimVector> out;
    DimVector cur = DimVector::zero(bound.size());
    for (;;) {
        if (!cur.is_zero()) out.push_back(cur);
        std::size_t i = bound.size();
        while (i > 0) {
            --i;
            if (cur.coords[i] < bound.coords[i]) {
                ++cur.coords[i];
                std::fill(cur.coords.begin() + static_cast<long>(i) + 1, cur.coords.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (bound.size() == 0) return out;
    }
}

template <class Accept>
void decompose_rec(const DimVector& rest, Decomposition& cur, std::vector<Decomposition>& out,
                   const Accept& accept) {
    if (rest.is_zero()) {
        out.push_back(cur);
        return;
    }
    for (const DimVector& part : parts_below(rest)) {
        if (!accept(cur, part)) continue;
        cur.push_back(part);
        decompose_rec(rest - part, cur, out, accept);
        cur.pop_back();
    }
}

template <class Accept>
std::vector<Decomposition> decompositions(const DimVector& alpha, const Accept& accept) {
    std::vector<Decomposition> out;
    if (alpha.is_zero()) return out;
    Decomposition cur;
    decompose_rec(alpha, cur, out, accept);
    return out;
}

}  // namespace

std::vector<Decomposition> enumerate_hn_types(const DimVector& alpha, const SlopeFunction& mu,
                                              const std::optional<SlopeFunction>& same_slope_under) {
    return decompositions(alpha, [&](const Decomposition& cur, const DimVector& part) {
        if (same_slope_under && slope_cmp(*same_slope_under, part, alpha) != 0) return false;
        return cur.empty() || slope_cmp(mu, cur.back(), part) > 0;
    });
}

std::vector<Decomposition> fixed_slope_decomps(const DimVector& alpha, const SlopeFunction& mu) {
    return decompositions(alpha, [&](const Decomposition&, const DimVector& part) {
        return slope_cmp(mu, part, alpha) == 0;
    });
}

std::vector<Decomposition> all_decomps(const DimVector& alpha) {
    return decompositions(alpha, [](const Decomposition&, const DimVector&) { return true; });
}

std::vector<DimVector> classes_below(const DimVector& bound) {
    auto out = parts_below(bound);
    std::stable_sort(out.begin(), out.end(),
                     [](const DimVector& a, const DimVector& b) { return a.total() < b.total(); });
    return out;
}

LaurentPoly poincare_gl(int n) {
    LaurentPoly p(BigRational(1), Variable::q);
    for (int i = 0; i < n; ++i)
        p *= LaurentPoly(LaurentPoly::Terms{{n, 1}, {i, -1}}, Variable::q);
    return p;
}

RatFunc stack_poincare(const Quiver& q, const DimVector& d, bool rigidified) {
    q.check_dim(d);
    if (d.is_zero()) return RatFunc(BigRational(1));
    int arrow_dim = 0;
    for (const auto& [s, t] : q.arrows)
        arrow_dim += d.coords[static_cast<std::size_t>(s)] * d.coords[static_cast<std::size_t>(t)];
    LaurentPoly num = LaurentPoly::monomial(arrow_dim, 1, Variable::q);
    if (rigidified) num *= LaurentPoly(LaurentPoly::Terms{{1, 1}, {0, -1}}, Variable::q);
    LaurentPoly den(BigRational(1), Variable::q);
    for (int dv : d.coords) den *= poincare_gl(dv);
    return RatFunc(num, den);
}

}  // namespace hallwc
