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

// Gabidulin codes over F_{q^m} and a bounded-distance rank-error decoder.

#ifndef XGAB_GABIDULIN_HPP_
#define XGAB_GABIDULIN_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "xgab/gf.hpp"
#include "xgab/matq.hpp"
#include "xgab/rng.hpp"

namespace xgab {

/// Rank over F_q of the components of v (dimension of their F_q-span).
std::size_t rank_weight(const ExtField& field, std::span<const ExtElem> v);

/// The [n, k] Gabidulin code generated by g, where g has rank weight n.
///
/// The generator is the k x n Moore matrix G(i, j) = g_j^{q^i}. The parity
/// check H is the kernel basis of G read off its reduced echelon form, so H
/// carries an identity on the non-pivot columns of G.
class GabidulinCode {
 public:
  /// Throws InvalidArgument unless k <= n <= m and rank_weight(g) == n.
  GabidulinCode(std::shared_ptr<const ExtField> field, std::vector<ExtElem> g,
                std::size_t k);

  const ExtField& field() const { return *field_; }
  const std::shared_ptr<const ExtField>& field_ptr() const { return field_; }
  const std::vector<ExtElem>& g() const { return g_; }
  std::size_t n() const { return g_.size(); }
  std::size_t k() const { return k_; }
  /// floor((n - k) / 2)
  std::size_t radius() const { return (n() - k_) / 2; }

  const MatrixQm& generator() const { return generator_; }
  const MatrixQm& parity_check() const { return parity_check_; }

  /// message * G
  std::vector<ExtElem> encode(std::span<const ExtElem> message) const;
  /// word * H^T
  std::vector<ExtElem> syndrome(std::span<const ExtElem> word) const;
  /// Some word y with y * H^T = s.
  std::vector<ExtElem> lift_syndrome(std::span<const ExtElem> s) const;

 private:
  std::shared_ptr<const ExtField> field_;
  std::vector<ExtElem> g_;
  std::size_t k_;
  MatrixQm generator_;
  MatrixQm parity_check_;
  std::vector<std::size_t> free_columns_;
};

/// Random vector of n elements of F_{q^m} with rank weight n (n <= m).
std::vector<ExtElem> random_full_rank_vector(const ExtField& field,
                                             std::size_t n, Rng& rng);

/// Returns the unique e with e * H^T = s and rank_weight(e) <= t, or nullopt
/// when the decoder cannot produce such an e. Requires t <= radius().
///
/// The syndrome is lifted to a received word and decoded with the
/// Welch-Berlekamp reconstruction for linearized polynomials.
std::optional<std::vector<ExtElem>> decode_syndrome(const GabidulinCode& code,
                                                    std::span<const ExtElem> s,
                                                    std::size_t t);

/// Exhaustive minimum rank distance; requires q^{km} <= 2^24.
std::size_t min_rank_distance_bruteforce(const GabidulinCode& code);
/// Exhaustive minimum Hamming distance; requires q^{km} <= 2^24.
std::size_t min_hamming_distance_bruteforce(const GabidulinCode& code);

}  // namespace xgab

#endif  // XGAB_GABIDULIN_HPP_
