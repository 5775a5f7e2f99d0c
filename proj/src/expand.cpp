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

#include "xgab/expand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xgab/error.hpp"

namespace xgab {

ExpandedCode::ExpandedCode(GabidulinCode parent, BasisPair basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  const ExtField& f = parent_.field();
  if (basis_.size() != f.m()) throw InvalidArgument("basis size must be m");
  ghat_ = phi_matrix(f, basis_, parent_.generator(), ExpandMode::kFullExpand);
  hhat_ = transpose(phi_matrix(f, basis_, transpose(parent_.parity_check()),
                               ExpandMode::kFullExpand));
}

ExpandedCode expand_code(GabidulinCode parent, BasisPair basis) {
  return ExpandedCode(std::move(parent), std::move(basis));
}

std::vector<Fq> syndrome_expanded(const ExpandedCode& ec, std::span<const Fq> y) {
  if (y.size() != ec.length()) throw InvalidArgument("word length must be nm");
  return multiply(y, transpose(ec.parity_check()));
}

MatrixQ error_matrix(std::uint32_t q, std::span<const Fq> e, std::size_t m) {
  if (m == 0 || e.size() % m != 0) {
    throw InvalidArgument("length must be a multiple of the block size");
  }
  return MatrixQ(q, e.size() / m, m, std::vector<Fq>(e.begin(), e.end()));
}

std::optional<std::vector<Fq>> decode_expanded_syndrome(
    const ExpandedCode& ec, std::span<const Fq> s, std::optional<std::size_t> t) {
  const GabidulinCode& parent = ec.parent();
  if (s.size() != (parent.n() - parent.k()) * ec.m()) {
    throw InvalidArgument("syndrome length must be m(n - k)");
  }
  const auto sigma = phi_inv(ec.field(), ec.basis(), s);
  const auto estar = decode_syndrome(parent, sigma, t.value_or(parent.radius()));
  if (!estar) return std::nullopt;
  return phi(ec.field(), ec.basis(), *estar);
}

std::optional<ExpandedDecoding> decode_expanded(const ExpandedCode& ec,
                                                std::span<const Fq> y) {
  const auto s = syndrome_expanded(ec, y);
  auto e = decode_expanded_syndrome(ec, s);
  if (!e) return std::nullopt;
  const PrimeField& fq = ec.field().base();
  ExpandedDecoding out;
  out.codeword.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out.codeword[i] = fq.sub(y[i], (*e)[i]);
  out.error = std::move(*e);
  return out;
}

HammingDistanceCheck hamming_distance_bounds_check(const ExpandedCode& ec,
                                                   std::uint64_t exhaustive_limit) {
  const std::size_t rows = ec.dimension();
  const double total = std::pow(static_cast<double>(ec.q()), static_cast<double>(rows));
  if (total > static_cast<double>(exhaustive_limit)) {
    throw InvalidArgument("expanded code too large for exhaustive search");
  }
  const MatrixQ& g = ec.generator();
  const std::uint32_t q = ec.q();
  const std::size_t len = ec.length();
  // Odometer over message digits, updating the codeword incrementally.
  std::vector<Fq> digits(rows, 0);
  std::vector<Fq> word(len, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (;;) {
    std::size_t pos = 0;
    while (pos < rows && digits[pos] + 1u == q) {
      digits[pos] = 0;
      const auto r = g.row(pos);
      // Wrapping from q - 1 to 0 subtracts (q - 1) * row, i.e. adds row.
      for (std::size_t c = 0; c < len; ++c) word[c] = static_cast<Fq>((word[c] + r[c]) % q);
      ++pos;
    }
    if (pos == rows) break;
    ++digits[pos];
    const auto r = g.row(pos);
    for (std::size_t c = 0; c < len; ++c) word[c] = static_cast<Fq>((word[c] + r[c]) % q);
    const auto weight = static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](Fq x) { return x != 0; }));
    best = std::min(best, weight);
  }
  const GabidulinCode& p = ec.parent();
  const std::size_t r = p.n() - p.k();
  HammingDistanceCheck out;
  out.distance = best;
  out.within_bounds = best >= r + 1 && best <= ec.m() * r + 1;
  return out;
}

}  // namespace xgab
