#include "hallwc/multilaurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "hallwc/errors.hpp"

namespace hallwc {

Monomial Monomial::unit(int var, std::int32_t power) {
    Monomial m;
    m.exps.at(static_cast<std::size_t>(var)) = power;
    return m;
}

Monomial Monomial::from(std::span<const int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars))
        throw SizeCap("at most " + std::to_string(kMaxVars) + " variables");
    Monomial m;
    std::copy(e.begin(), e.end(), m.exps.begin());
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = -exps[i];
    return r;
}

int Monomial::total_degree() const {
    int s = 0;
    for (auto e : exps) s += e;
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

MultiLaurent::MultiLaurent(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw SizeCap("variable count " + std::to_string(nvars) + " outside 1.." +
                      std::to_string(kMaxVars));
}

MultiLaurent MultiLaurent::constant(int nvars, const BigRational& c) {
    return monomial(nvars, Monomial{}, c);
}

MultiLaurent MultiLaurent::monomial(int nvars, const Monomial& m, const BigRational& c) {
    MultiLaurent p(nvars);
    p.add_term(m, c);
    return p;
}

BigRational MultiLaurent::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiLaurent::add_term(const Monomial& m, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<std::pair<Monomial, BigRational>> MultiLaurent::sorted_terms() const {
    std::vector<std::pair<Monomial, BigRational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool MultiLaurent::is_weight_zero() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.total_degree() == 0; });
}

static void check_vars(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars() != b.nvars())
        throw VarCountMismatch(std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) +
                               " variables");
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    check_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    check_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiLaurent& MultiLaurent::operator*=(const BigRational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    return ml_mul_parallel(a, b, 1);
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiLaurent MultiLaurent::pow(unsigned e) const {
    MultiLaurent result = constant(nvars_, 1);
    MultiLaurent base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiLaurent MultiLaurent::rename(std::span<const int> new_index, int target_nvars) const {
    if (new_index.size() != static_cast<std::size_t>(nvars_))
        throw VarCountMismatch("rename map has wrong length");
    MultiLaurent r(target_nvars);
    for (int idx : new_index)
        if (idx < 0 || idx >= target_nvars) throw VarCountMismatch("rename target out of range");
    for (const auto& [m, c] : terms_) {
        Monomial t;
        for (int i = 0; i < nvars_; ++i)
            t.exps[static_cast<std::size_t>(new_index[static_cast<std::size_t>(i)])] +=
                m.exps[static_cast<std::size_t>(i)];
        r.add_term(t, c);
    }
    return r;
}

std::string MultiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int i = 0; i < nvars_; ++i) {
            const auto e = m.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            os << "*u" << (i + 1);
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

MultiLaurent ml_arith(const MultiLaurent& a, const MultiLaurent& b, MlOp op) {
    switch (op) {
        case MlOp::add: return a + b;
        case MlOp::sub: return a - b;
        case MlOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown op");
}

MultiLaurent ml_mul_parallel(const MultiLaurent& a, const MultiLaurent& b, unsigned jobs) {
    check_vars(a, b);
    std::vector<const MultiLaurent::Terms::value_type*> lhs;
    lhs.reserve(a.size());
    for (const auto& t : a.terms()) lhs.push_back(&t);

    auto partial = [&](std::size_t begin, std::size_t end) {
        MultiLaurent r(a.nvars());
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& [m, c] : b.terms()) r.add_term(lhs[i]->first * m, lhs[i]->second * c);
        return r;
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lhs.size() / 8 + 1)));
    if (jobs == 1) return partial(0, lhs.size());

    std::vector<std::optional<MultiLaurent>> parts(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (lhs.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::size_t lo = std::min(lhs.size(), j * chunk);
        const std::size_t hi = std::min(lhs.size(), lo + chunk);
        workers.emplace_back([&, j, lo, hi] { parts[j] = partial(lo, hi); });
    }
    for (auto& w : workers) w.join();
    MultiLaurent r(a.nvars());
    for (auto& p : parts) r += *p;
    return r;
}

MultiLaurent divide_exact(const MultiLaurent& a, const MultiLaurent& b) {
    check_vars(a, b);
    if (b.is_zero()) throw DivisionByZero("multivariate division by zero");
    MultiLaurent quot(a.nvars());
    if (a.is_zero()) return quot;

    // Quotient exponents are confined to the box [min a - min b, max a - max b].
    std::array<std::int32_t, kMaxVars> lo{}, hi{};
    auto bounds = [](const MultiLaurent& p, auto& mn, auto& mx) {
        mn.fill(INT32_MAX);
        mx.fill(INT32_MIN);
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                mn[i] = std::min(mn[i], m.exps[i]);
                mx[i] = std::max(mx[i], m.exps[i]);
            }
    };
    std::array<std::int32_t, kMaxVars> amin{}, amax{}, bmin{}, bmax{};
    bounds(a, amin, amax);
    bounds(b, bmin, bmax);
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = amin[i] - bmin[i];
        hi[i] = amax[i] - bmax[i];
    }

    std::map<Monomial, BigRational, std::greater<>> rem(a.terms().begin(), a.terms().end());
    const auto b_lead = std::max_element(b.terms().begin(), b.terms().end(),
                                         [](const auto& x, const auto& y) { return x.first < y.first; });
    const Monomial lead_inv = b_lead->first.inverse();
    const BigRational lead_c_inv = b_lead->second.inverse();

    while (!rem.empty()) {
        const auto [m, c] = *rem.begin();
        const Monomial qm = m * lead_inv;
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (qm.exps[i] < lo[i] || qm.exps[i] > hi[i]) throw NotExact("divisor does not divide");
        const BigRational qc = c * lead_c_inv;
        quot.add_term(qm, qc);
        for (const auto& [bm, bc] : b.terms()) {
            const Monomial t = qm * bm;
            auto [it, inserted] = rem.try_emplace(t, -(qc * bc));
            if (!inserted) {
                it->second -= qc * bc;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return quot;
}

BigRational constant_term(const MultiLaurent& p) { return p.coeff(Monomial{}); }

BigRational constant_term_of_product(const MultiLaurent& a, const MultiLaurent& b) {
    check_vars(a, b);
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    BigRational acc = 0;
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m.inverse());
        if (it != large.terms().end()) acc += c * it->second;
    }
    return acc;
}

const MultiLaurent& gamma_minus(int n) {
    if (n < 1 || n > kMaxVars)
        throw SizeCap("gamma_minus supports 1.." + std::to_string(kMaxVars) + " variables");
    static std::array<std::once_flag, kMaxVars + 1> once;
    static std::array<std::optional<MultiLaurent>, kMaxVars + 1> cache;
    const auto slot = static_cast<std::size_t>(n);
    std::call_once(once[slot], [n, slot] {
        MultiLaurent acc = MultiLaurent::constant(n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                MultiLaurent f = MultiLaurent::constant(n, 1);
                f.add_term(Monomial::unit(i) * Monomial::unit(j, -1), -1);
                acc = acc * f;
            }
        cache[slot] = std::move(acc);
    });
    return *cache[slot];
}

int VirtualLineSum::rank() const {
    int r = 0;
    for (const auto& l : lines) r += l.sign;
    return r;
}

namespace {

using Series = std::vector<MultiLaurent>;

Series series_mul(const Series& a, const Series& b, int nvars, std::size_t len) {
    Series r(len, MultiLaurent(nvars));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

LambdaSeries lambda_series(const VirtualLineSum& v, LambdaDirection direction, int order) {
    if (order < 0) throw InvalidInput("negative truncation order");
    const int n = v.nvars;
    const auto len = static_cast<std::size_t>(order) + 1;
    LambdaSeries out;
    out.direction = direction;
    Series acc(len, MultiLaurent(n));
    acc[0] = MultiLaurent::constant(n, 1);

    for (const auto& line : v.lines) {
        if (line.sign != 1 && line.sign != -1) throw InvalidInput("line sign must be +1 or -1");
        Series factor;
        if (direction == LambdaDirection::t_zero) {
            if (line.sign > 0) {
                // 1 - t m
                factor = {MultiLaurent::constant(n, 1), MultiLaurent::monomial(n, line.weight, -1)};
            } else {
                // sum_k t^k m^k
                for (std::size_t k = 0; k < len; ++k) {
                    Monomial mk;
                    for (std::size_t i = 0; i < mk.exps.size(); ++i)
                        mk.exps[i] = line.weight.exps[i] * static_cast<std::int32_t>(k);
                    factor.push_back(MultiLaurent::monomial(n, mk));
                }
            }
        } else {
            // Series in s = 1/t below the leading power of t.
            const Monomial inv = line.weight.inverse();
            if (line.sign > 0) {
                // 1 - t m = t (-m) (1 - s m^-1)
                factor = {MultiLaurent::monomial(n, line.weight, -1), MultiLaurent::constant(n, 1)};
            } else {
                // (1 - t m)^-1 = t^-1 (-m^-1) sum_k s^k m^-k
                for (std::size_t k = 0; k < len; ++k) {
                    Monomial mk;
                    for (std::size_t i = 0; i < mk.exps.size(); ++i)
                        mk.exps[i] = inv.exps[i] * static_cast<std::int32_t>(k + 1);
                    factor.push_back(MultiLaurent::monomial(n, mk, -1));
                }
            }
            out.top_power += line.sign;
        }
        acc = series_mul(acc, factor, n, len);
    }
    out.coeffs = std::move(acc);
    return out;
}

MultiLaurent block_embed(const MultiLaurent& p, int offset, int target_nvars) {
    if (offset < 0 || offset + p.nvars() > target_nvars)
        throw VarCountMismatch("block does not fit the target variable count");
    std::vector<int> idx(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) idx[static_cast<std::size_t>(i)] = offset + i;
    return p.rename(idx, target_nvars);
}

bool is_symmetric(const MultiLaurent& p, std::span<const int> block_sizes) {
    int total = 0;
    for (int s : block_sizes) total += s;
    if (total != p.nvars()) throw VarCountMismatch("block sizes do not sum to the variable count");
    std::vector<int> idx(static_cast<std::size_t>(p.nvars()));
    int start = 0;
    for (int s : block_sizes) {
        for (int i = start; i + 1 < start + s; ++i) {
            for (int k = 0; k < p.nvars(); ++k) idx[static_cast<std::size_t>(k)] = k;
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i + 1)]);
            if (!(p.rename(idx, p.nvars()) == p)) return false;
        }
        start += s;
    }
    return true;
}

}  // namespace hallwc
