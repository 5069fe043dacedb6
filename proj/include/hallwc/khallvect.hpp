/**
 * @file khallvect.hpp
 * @brief K-Hall functionals for the category of vector spaces.
 *
 * A functional on K(BPGL_n) is evaluated on a weight-zero character chi of
 * GL_n. The n-fold product over blocks n_1..n_k pairs chi with the full
 * density prod_{i != j}(1 - u_i/u_j) on the maximal torus and divides by
 * the block Weyl group orders.
 */
#pragma once

#include <vector>

#include "hallwc/repchar.hpp"

namespace hallwc {

/// Largest total rank accepted by the product evaluations.
inline constexpr int kMaxVectRank = 5;

struct BlockProfile {
    std::vector<int> sizes;

    /// Throws InvalidInput unless nonempty with all sizes >= 1.
    explicit BlockProfile(std::vector<int> s);
    int total() const;
};

struct VectFunctionalResult {
    BigRational value;
    BlockProfile profile;
    int total_rank = 0;
};

/// delta_n(chi): dimension of the PGL_n-fixed part.
BigRational delta_eval(int n, const Character& chi);

/// (delta_{n_1} * ... * delta_{n_k})(chi) = constant_term(gamma_minus(N) chi) / prod n_a!.
BigRational khall_product_eval(const BlockProfile& blocks, const Character& chi);
VectFunctionalResult khall_product(const BlockProfile& blocks, const Character& chi);

/// Independent route: per-block Weyl densities times the cross-block factors
/// Lambda_{-1}(Ext_< + Ext_>^dual) (x) det(Ext_<)^dual [rk], the latter built
/// from Lambda series of the Ext line characters.
BigRational khall_product_eval_blockwise(const BlockProfile& blocks, const Character& chi);
/// The cross-block Gamma factor on its own.
MultiLaurent cross_block_factor(const BlockProfile& blocks);

/// sum over compositions (n_1..n_k) of n of (-1)^{k-1}/k (delta_{n_1} * ... * delta_{n_k})(chi).
BigRational epsilon_eval(int n, const Character& chi);

/// All compositions of n in lexicographic order.
std::vector<std::vector<int>> compositions(int n);

}  // namespace hallwc
