#include "hallwc/khallvect.hpp"

#include <algorithm>

#include "hallwc/errors.hpp"

namespace hallwc {

BlockProfile::BlockProfile(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw InvalidInput("block profile must be nonempty");
    if (std::any_of(sizes.begin(), sizes.end(), [](int x) { return x < 1; }))
        throw InvalidInput("block sizes must be positive");
}

int BlockProfile::total() const {
    int t = 0;
    for (int s : sizes) t += s;
    return t;
}

namespace {

void check_input(int n, const Character& chi) {
    if (n > kMaxVectRank) throw SizeCap("total rank " + std::to_string(n) + " exceeds " +
                                        std::to_string(kMaxVectRank));
    if (chi.n() != n)
        throw VarCountMismatch("character has " + std::to_string(chi.n()) + " variables, expected " +
                               std::to_string(n));
    if (!chi.weight_zero()) throw InvalidInput("character is not weight-zero");
}

BigRational block_weyl_order(const BlockProfile& blocks) {
    BigInt d = 1;
    for (int s : blocks.sizes) d *= factorial(static_cast<unsigned>(s));
    return BigRational(d);
}

}  // namespace

BigRational delta_eval(int n, const Character& chi) {
    check_input(n, chi);
    return invariant_dim_ct(chi).value;
}

BigRational khall_product_eval(const BlockProfile& blocks, const Character& chi) {
    const int n = blocks.total();
    check_input(n, chi);
    return constant_term_of_product(gamma_minus(n), chi.poly()) / block_weyl_order(blocks);
}

VectFunctionalResult khall_product(const BlockProfile& blocks, const Character& chi) {
    return {khall_product_eval(blocks, chi), blocks, blocks.total()};
}

MultiLaurent cross_block_factor(const BlockProfile& blocks) {
    const int n = blocks.total();
    std::vector<int> block_of;
    for (std::size_t a = 0; a < blocks.sizes.size(); ++a)
        block_of.insert(block_of.end(), static_cast<std::size_t>(blocks.sizes[a]), static_cast<int>(a));

    // Ext_{ij} has character u_j/u_i. Across blocks, Ext_< + Ext_>^dual puts
    // u_j/u_i twice for every cross pair i < j.
    VirtualLineSum lines;
    lines.nvars = n;
    Monomial det_ext_less;
    int rank_less = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(j)]) continue;
            const Monomial w = Monomial::unit(j) * Monomial::unit(i, -1);
            lines.lines.push_back({w, 1});
            lines.lines.push_back({w, 1});
            det_ext_less = det_ext_less * w;
            ++rank_less;
        }

    // Lambda_{-1}: the t-series at t = 1, which terminates for genuine bundles.
    const LambdaSeries s = lambda_series(lines, LambdaDirection::t_zero, lines.rank());
    MultiLaurent lambda(n);
    for (const auto& c : s.coeffs) lambda += c;
    const BigRational shift_sign = rank_less % 2 ? -1 : 1;
    return lambda * MultiLaurent::monomial(n, det_ext_less.inverse(), shift_sign);
}

BigRational khall_product_eval_blockwise(const BlockProfile& blocks, const Character& chi) {
    const int n = blocks.total();
    check_input(n, chi);
    MultiLaurent density = cross_block_factor(blocks);
    int offset = 0;
    for (int s : blocks.sizes) {
        density = density * block_embed(gamma_minus(s), offset, n);
        offset += s;
    }
    return constant_term_of_product(density, chi.poly()) / block_weyl_order(blocks);
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

BigRational epsilon_eval(int n, const Character& chi) {
    check_input(n, chi);
    BigRational acc = 0;
    for (const auto& comp : compositions(n)) {
        const long k = static_cast<long>(comp.size());
        const BigRational w(BigInt(k % 2 ? 1 : -1), BigInt(k));
        acc += w * khall_product_eval(BlockProfile(comp), chi);
    }
    return acc;
}

}  // namespace hallwc
