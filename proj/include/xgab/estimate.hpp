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

// Attack cost, key size and information rate estimates. All costs are log2
// of the formula value with unit constant.

#ifndef XGAB_ESTIMATE_HPP_
#define XGAB_ESTIMATE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xgab/pke.hpp"

namespace xgab {

inline constexpr double kOmega = 2.8;

/// Combinatorial rank syndrome decoding on an [n, k] code over F_{q^m}:
/// log2(m^3 (n - k)^3) - log2 p, with p the probability that a guessed
/// t'-dimensional space contains the error support. +infinity when t
/// exceeds t'. Throws InvalidArgument unless t <= n - k < n.
double cost_rsd_combinatorial(std::uint32_t q, std::size_t m, std::size_t n,
                              std::size_t k, std::size_t t);

/// The support-guessing attacks on the ciphertext error. For I only the
/// case matching n > lambda or n <= lambda applies; for II both apply.
struct CombinatorialCosts {
  std::array<double, 2> cost{};
  std::array<bool, 2> applicable{};
  double best() const;
};

/// t overrides the error rank of the parameter set.
CombinatorialCosts combinatorial_costs(const Params& params,
                                       std::optional<std::size_t> t = std::nullopt);
double cost_proposal_i(const Params& params);
double cost_proposal_ii(const Params& params);

/// The three algebraic MinRank attacks for numMat matrices of size
/// rows x cols and target rank r. Rows 2 and 3 record the degree b.
struct AlgebraicCosts {
  std::array<double, 3> cost{};
  std::array<bool, 3> applicable{};
  std::array<std::size_t, 3> degree{};
  /// Minimum over applicable rows, +infinity when none applies.
  double best() const;
};

AlgebraicCosts cost_minrank_algebraic(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::size_t num_mat,
                                      std::size_t r);

struct KeySize {
  /// Information-theoretic public key size in bits.
  double bits = 0;
  /// ceil(bits / 8)
  std::uint64_t bytes = 0;
  /// Rate K / N rounded half-up to two decimals, times 100.
  unsigned rate_hundredths = 0;
  double rate() const { return rate_hundredths / 100.0; }
};

KeySize key_size_and_rate(const Params& params);

struct CostReport {
  Params params;
  std::size_t t = 0;
  CombinatorialCosts combinatorial;
  AlgebraicCosts algebraic;
  /// Generic decoding of the parent code; reported, not counted.
  double rsd_parent = 0;
  unsigned security_bits = 0;
  KeySize key;
};

/// Security is the floor of the minimum over the combinatorial and the
/// applicable algebraic costs on the MinRank reduction of a ciphertext.
/// t overrides the error rank of the parameter set.
CostReport security_report(const Params& params,
                           std::optional<std::size_t> t = std::nullopt);

std::string render_text(const CostReport& report);
std::string csv_header();
std::string render_csv(const CostReport& report);

/// A published parameter set with its claimed figures.
struct ReferenceRow {
  Params params;
  unsigned target_bits;
  std::uint64_t key_bytes;
  unsigned rate_hundredths;
};

const std::vector<ReferenceRow>& reference_rows();

}  // namespace xgab

#endif  // XGAB_ESTIMATE_HPP_
