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

// Expanded Gabidulin codes over F_q and their four-step decoder.

#ifndef XGAB_EXPAND_HPP_
#define XGAB_EXPAND_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xgab/gabidulin.hpp"
#include "xgab/gf.hpp"
#include "xgab/matq.hpp"

namespace xgab {

/// The [nm, km] code phi_B(C) of a Gabidulin code C.
class ExpandedCode {
 public:
  ExpandedCode(GabidulinCode parent, BasisPair basis);

  const GabidulinCode& parent() const { return parent_; }
  const BasisPair& basis() const { return basis_; }
  const ExtField& field() const { return parent_.field(); }
  std::uint32_t q() const { return field().q(); }
  std::size_t m() const { return field().m(); }
  /// N = nm
  std::size_t length() const { return parent_.n() * m(); }
  /// K = km
  std::size_t dimension() const { return parent_.k() * m(); }

  /// Phi_B(G), km x nm.
  const MatrixQ& generator() const { return ghat_; }
  /// Phi_B(H^T)^T, m(n - k) x nm.
  const MatrixQ& parity_check() const { return hhat_; }

 private:
  GabidulinCode parent_;
  BasisPair basis_;
  MatrixQ ghat_;
  MatrixQ hhat_;
};

ExpandedCode expand_code(GabidulinCode parent, BasisPair basis);

/// y * Hhat^T. Throws InvalidArgument on a length mismatch.
std::vector<Fq> syndrome_expanded(const ExpandedCode& ec, std::span<const Fq> y);

/// The n x m matrix whose row j is block j of e.
MatrixQ error_matrix(std::uint32_t q, std::span<const Fq> e, std::size_t m);

/// Error e of length nm with e * Hhat^T = s and rank(error_matrix(e)) <= t,
/// via the parent decoder. t defaults to floor((n - k) / 2).
std::optional<std::vector<Fq>> decode_expanded_syndrome(
    const ExpandedCode& ec, std::span<const Fq> s,
    std::optional<std::size_t> t = std::nullopt);

struct ExpandedDecoding {
  std::vector<Fq> codeword;
  std::vector<Fq> error;
};

/// Splits y into codeword plus an error of block-matrix rank at most
/// floor((n - k) / 2), or nullopt when no such split is found.
std::optional<ExpandedDecoding> decode_expanded(const ExpandedCode& ec,
                                                std::span<const Fq> y);

struct HammingDistanceCheck {
  std::size_t distance = 0;
  /// n - k + 1 <= distance <= m(n - k) + 1
  bool within_bounds = false;
};

/// Exhaustive minimum Hamming weight of the expanded code. Throws
/// InvalidArgument when q^{km} exceeds exhaustive_limit.
HammingDistanceCheck hamming_distance_bounds_check(
    const ExpandedCode& ec, std::uint64_t exhaustive_limit = 1u << 20);

}  // namespace xgab

#endif  // XGAB_EXPAND_HPP_
