/*
 * Copyright 2026 The xgab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Structural attacks on expanded codes: twisted Frobenius powers, the
// sum-of-powers distinguisher, and the MinRank view of a ciphertext.

#ifndef XGAB_ANALYSIS_HPP_
#define XGAB_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xgab/expand.hpp"
#include "xgab/matq.hpp"
#include "xgab/pke.hpp"
#include "xgab/rng.hpp"

namespace xgab {

/// A code over F_q whose N = nm coordinates are grouped into n blocks of m.
struct BlockCode {
  /// K x N generator, K = km.
  MatrixQ g;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
};

/// Wraps a full-row-rank generator. Throws InvalidArgument unless m divides
/// both dimensions and the rows are independent.
BlockCode make_block_code(MatrixQ g, std::size_t m);

/// The lexicographically first k blocks whose columns have rank K, as block
/// indices, or nullopt when no such choice exists.
std::optional<std::vector<std::size_t>> block_information_set(const BlockCode& bc);

/// Column indices covered by the given blocks.
std::vector<std::size_t> block_columns(std::span<const std::size_t> blocks,
                                       std::size_t m);

/// The s-th twisted Frobenius power: with G_I the generator that is the
/// identity on a block information set, every m x m block of G_I is raised
/// to the matrix power q^s. Without a block information set the rref
/// generator is used instead.
BlockCode twisted_power(const BlockCode& bc, std::size_t s);

/// dim(C + C^(1) + ... + C^(i)).
std::size_t sum_of_powers_dim(const BlockCode& bc, std::size_t i);

/// Generator of the dual code, as a block code.
BlockCode dual_code(const BlockCode& bc);

enum class Verdict { kExpandedGabidulinLike, kRandomLike };

struct Distinguished {
  std::size_t dim = 0;
  Verdict verdict = Verdict::kRandomLike;
  std::size_t dual_dim = 0;
  Verdict dual_verdict = Verdict::kRandomLike;
};

/// Expanded-Gabidulin-like iff dim(C + C^(1)) <= (k + 1)m < min(N, 2km);
/// applied to the code and to its dual. Throws InvalidArgument unless
/// K < N and m >= 2.
Distinguished distinguish(const BlockCode& bc);

/// phi_B of a random [n, k] Gabidulin code with a random basis.
BlockCode random_expanded_gabidulin(std::uint32_t q, std::size_t m,
                                    std::size_t n, std::size_t k, Rng& rng);
/// phi_B of a random full-rank k x n matrix over F_{q^m}.
BlockCode random_expanded_code(std::uint32_t q, std::size_t m, std::size_t n,
                               std::size_t k, Rng& rng);
/// A random full-rank km x nm matrix over F_q.
BlockCode random_plain_code(std::uint32_t q, std::size_t m, std::size_t n,
                            std::size_t k, Rng& rng);
/// G_pub of a public key viewed as a block code with block size m (II) or
/// lambda (I); nullopt when the block size does not divide K.
std::optional<BlockCode> public_key_code(const PublicKey& pk);

/// The n x s matrix whose row i is the i-th length-s chunk of x. Throws
/// InvalidArgument unless n divides the length.
MatrixQ sigma(std::uint32_t q, std::span<const Fq> x, std::size_t n);
/// Row-major flattening, the inverse of sigma.
std::vector<Fq> flatten(const MatrixQ& m);

struct MinRankInstance {
  std::vector<MatrixQ> matrices;
  std::size_t target = 0;
};

/// M_0 = sigma_n(y), M_i = sigma_n(row i of G_pub); target t for I and
/// lambda t for II.
MinRankInstance minrank_from_ciphertext(const PublicKey& pk, std::span<const Fq> y);

/// First coefficient vector a (in odometer order, a_0 varying fastest) with
/// rank(sum a_i M_i) <= target and a != 0, or with a_0 = 1 when
/// normalize_first is set. Throws InvalidArgument when more than 2^24
/// vectors would have to be searched.
std::optional<std::vector<Fq>> minrank_bruteforce(const MinRankInstance& inst,
                                                  bool normalize_first);

}  // namespace xgab

#endif  // XGAB_ANALYSIS_HPP_
