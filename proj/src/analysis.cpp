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

#include "xgab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "xgab/error.hpp"
#include "xgab/gabidulin.hpp"

namespace xgab {

BlockCode make_block_code(MatrixQ g, std::size_t m) {
  if (m == 0 || g.rows() % m != 0 || g.cols() % m != 0) {
    throw InvalidArgument("block size must divide both generator dimensions");
  }
  if (rank(g) != g.rows()) throw InvalidArgument("generator rows are dependent");
  const std::size_t n = g.cols() / m, k = g.rows() / m;
  return BlockCode{std::move(g), m, n, k};
}

std::vector<std::size_t> block_columns(std::span<const std::size_t> blocks,
                                       std::size_t m) {
  std::vector<std::size_t> cols;
  cols.reserve(blocks.size() * m);
  for (const auto b : blocks) {
    for (std::size_t i = 0; i < m; ++i) cols.push_back(b * m + i);
  }
  return cols;
}

std::optional<std::vector<std::size_t>> block_information_set(const BlockCode& bc) {
  if (bc.k > bc.n) return std::nullopt;
  const std::size_t rows = bc.g.rows();
  std::vector<std::size_t> blocks(bc.k);
  for (std::size_t i = 0; i < bc.k; ++i) blocks[i] = i;
  for (;;) {
    if (rank(select_columns(bc.g, block_columns(blocks, bc.m))) == rows) return blocks;
    // Next k-combination of {0, ..., n - 1} in lexicographic order.
    std::size_t i = bc.k;
    while (i > 0 && blocks[i - 1] == bc.n - bc.k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++blocks[i - 1];
    for (std::size_t j = i; j < bc.k; ++j) blocks[j] = blocks[j - 1] + 1;
  }
}

BlockCode twisted_power(const BlockCode& bc, std::size_t s) {
  MatrixQ gi;
  if (const auto info = block_information_set(bc)) {
    const auto lead = inverse(select_columns(bc.g, block_columns(*info, bc.m)));
    gi = multiply(*lead, bc.g);
  } else {
    const auto r = rref(bc.g);
    gi = submatrix(r.reduced, 0, 0, r.rank, bc.g.cols());
  }
  const std::uint32_t q = bc.g.q();
  const std::size_t m = bc.m;
  for (std::size_t a = 0; a * m < gi.rows(); ++a) {
    for (std::size_t b = 0; b < bc.n; ++b) {
      MatrixQ block = submatrix(gi, a * m, b * m, m, m);
      for (std::size_t j = 0; j < s; ++j) block = power(block, q);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) gi(a * m + r, b * m + c) = block(r, c);
      }
    }
  }
  return BlockCode{std::move(gi), bc.m, bc.n, bc.k};
}

std::size_t sum_of_powers_dim(const BlockCode& bc, std::size_t i) {
  MatrixQ stacked = bc.g;
  for (std::size_t s = 1; s <= i; ++s) stacked = vstack(stacked, twisted_power(bc, s).g);
  return rank(stacked);
}

BlockCode dual_code(const BlockCode& bc) {
  return BlockCode{right_kernel(bc.g), bc.m, bc.n, bc.n - bc.k};
}

namespace {

Verdict verdict_for(std::size_t dim, std::size_t m, std::size_t n, std::size_t k) {
  const std::size_t threshold = (k + 1) * m;
  const std::size_t ceiling = std::min(n * m, 2 * k * m);
  return dim <= threshold && threshold < ceiling ? Verdict::kExpandedGabidulinLike
                                                 : Verdict::kRandomLike;
}

}  // namespace

Distinguished distinguish(const BlockCode& bc) {
  if (bc.m < 2) throw InvalidArgument("distinguisher requires m >= 2");
  if (!(bc.k < bc.n)) throw InvalidArgument("distinguisher requires K < N");
  Distinguished out;
  out.dim = sum_of_powers_dim(bc, 1);
  out.verdict = verdict_for(out.dim, bc.m, bc.n, bc.k);
  const BlockCode dual = dual_code(bc);
  out.dual_dim = sum_of_powers_dim(dual, 1);
  out.dual_verdict = verdict_for(out.dual_dim, dual.m, dual.n, dual.k);
  return out;
}

BlockCode random_expanded_gabidulin(std::uint32_t q, std::size_t m,
                                    std::size_t n, std::size_t k, Rng& rng) {
  const auto field = make_ext_field(q, m);
  auto g = random_full_rank_vector(*field, n, rng);
  auto basis = random_basis(*field, rng);
  const ExpandedCode ec(GabidulinCode(field, std::move(g), k), std::move(basis));
  return BlockCode{ec.generator(), m, n, k};
}

BlockCode random_expanded_code(std::uint32_t q, std::size_t m, std::size_t n,
                               std::size_t k, Rng& rng) {
  const auto field = make_ext_field(q, m);
  MatrixQm g(*field, k, n);
  do {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = field->random(rng);
    }
  } while (rank(*field, g) < k);
  const auto basis = random_basis(*field, rng);
  return BlockCode{phi_matrix(*field, basis, g, ExpandMode::kFullExpand), m, n, k};
}

BlockCode random_plain_code(std::uint32_t q, std::size_t m, std::size_t n,
                            std::size_t k, Rng& rng) {
  MatrixQ g;
  do {
    g = random_matrix(q, k * m, n * m, rng);
  } while (rank(g) < k * m);
  return BlockCode{std::move(g), m, n, k};
}

std::optional<BlockCode> public_key_code(const PublicKey& pk) {
  const Params& p = pk.params;
  const std::size_t block = p.proposal == Proposal::kI ? p.lambda : p.m;
  if (pk.g_pub.rows() % block != 0) return std::nullopt;
  return BlockCode{pk.g_pub, block, pk.g_pub.cols() / block, pk.g_pub.rows() / block};
}

MatrixQ sigma(std::uint32_t q, std::span<const Fq> x, std::size_t n) {
  if (n == 0 || x.size() % n != 0) throw InvalidArgument("length must be a multiple of n");
  return MatrixQ(q, n, x.size() / n, std::vector<Fq>(x.begin(), x.end()));
}

std::vector<Fq> flatten(const MatrixQ& m) {
  return {m.data().begin(), m.data().end()};
}

MinRankInstance minrank_from_ciphertext(const PublicKey& pk, std::span<const Fq> y) {
  const Params& p = pk.params;
  if (y.size() != pk.g_pub.cols()) throw InvalidArgument("ciphertext length must be N");
  MinRankInstance inst;
  inst.target = p.proposal == Proposal::kI ? pk.t : p.lambda * pk.t;
  inst.matrices.push_back(sigma(p.q, y, p.n));
  for (std::size_t i = 0; i < pk.g_pub.rows(); ++i) {
    inst.matrices.push_back(sigma(p.q, pk.g_pub.row(i), p.n));
  }
  return inst;
}

std::optional<std::vector<Fq>> minrank_bruteforce(const MinRankInstance& inst,
                                                  bool normalize_first) {
  const std::size_t count = inst.matrices.size();
  if (count == 0) return std::nullopt;
  const MatrixQ& first = inst.matrices.front();
  const std::uint32_t q = first.q();
  for (const auto& mat : inst.matrices) {
    if (mat.rows() != first.rows() || mat.cols() != first.cols() || mat.q() != q) {
      throw InvalidArgument("MinRank matrices must share one shape and field");
    }
  }
  const std::size_t start = normalize_first ? 1 : 0;
  const double total = std::pow(static_cast<double>(q), static_cast<double>(count - start));
  if (total > static_cast<double>(1u << 24)) {
    throw InvalidArgument("MinRank search space exceeds 2^24");
  }
  std::vector<Fq> a(count, 0);
  if (normalize_first) a[0] = 1;
  const std::size_t cells = first.rows() * first.cols();
  std::vector<std::uint64_t> acc(cells);
  for (;;) {
    const bool zero = std::all_of(a.begin(), a.end(), [](Fq x) { return x == 0; });
    if (!zero) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < count; ++i) {
        if (a[i] == 0) continue;
        const auto d = inst.matrices[i].data();
        for (std::size_t c = 0; c < cells; ++c) acc[c] += static_cast<std::uint64_t>(a[i]) * d[c];
      }
      MatrixQ combo(q, first.rows(), first.cols());
      for (std::size_t c = 0; c < cells; ++c) combo.data()[c] = static_cast<Fq>(acc[c] % q);
      if (rank(combo) <= inst.target) return a;
    }
    std::size_t pos = start;
    while (pos < count && ++a[pos] == q) a[pos++] = 0;
    if (pos == count) return std::nullopt;
  }
}

}  // namespace xgab
