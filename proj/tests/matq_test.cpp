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

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "xgab/error.hpp"
#include "xgab/matq.hpp"

namespace xgab {
namespace {

bool is_zero(const MatrixQ& m) {
  for (const auto v : m.data()) {
    if (v != 0) return false;
  }
  return true;
}

TEST(Rref, SmallExamples) {
  const auto id = rref(MatrixQ::identity(5, 3));
  EXPECT_EQ(id.reduced, MatrixQ::identity(5, 3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  const auto zero = rref(MatrixQ(2, 2, 2));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_TRUE(zero.pivots.empty());
  EXPECT_TRUE(is_zero(zero.reduced));

  EXPECT_EQ(rank(MatrixQ(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2u);
}

TEST(Rref, IdempotentAndTransposeRank) {
  Rng rng(1);
  for (const std::uint32_t q : {2u, 3u, 13u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t r = 1 + rng.uniform(8), c = 1 + rng.uniform(8);
      const MatrixQ m = multiply(random_matrix(q, r, 3, rng), random_matrix(q, 3, c, rng));
      const auto red = rref(m);
      EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
      EXPECT_EQ(red.rank, rank(transpose(m)));
      EXPECT_LE(red.rank, 3u);
    }
  }
}

TEST(RightKernel, Examples) {
  EXPECT_EQ(right_kernel(MatrixQ::identity(3, 4)).rows(), 0u);
  EXPECT_EQ(right_kernel(MatrixQ(3, 2, 4)), MatrixQ::identity(3, 4));
  EXPECT_EQ(right_kernel(MatrixQ(2, {{1, 1}})), MatrixQ(2, {{1, 1}}));
}

TEST(RightKernel, DimensionAndOrthogonality) {
  Rng rng(2);
  for (const std::uint32_t q : {2u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t r = 1 + rng.uniform(6), c = 1 + rng.uniform(9);
      const MatrixQ m = random_matrix(q, r, c, rng);
      const MatrixQ k = right_kernel(m);
      EXPECT_EQ(k.rows() + rank(m), c);
      EXPECT_EQ(rank(k), k.rows());
      if (k.rows() > 0) EXPECT_TRUE(is_zero(multiply(m, transpose(k))));
    }
  }
}

TEST(Inverse, RoundTrip) {
  Rng rng(3);
  const MatrixQ a = random_invertible(13, 6, rng);
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(multiply(a, *inv), MatrixQ::identity(13, 6));
  EXPECT_FALSE(inverse(MatrixQ(13, 3, 3)).has_value());
}

TEST(SystematicForm, Examples) {
  const MatrixQ g(2, {{1, 0, 1, 1}, {0, 1, 0, 1}});
  const auto sf = systematic_form(g);
  ASSERT_TRUE(sf.has_value());
  EXPECT_EQ(sf->transform, MatrixQ::identity(2, 2));
  EXPECT_EQ(sf->generator, g);

  const MatrixQ lead_zero(2, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_FALSE(systematic_form(lead_zero).has_value());

  EXPECT_THROW(systematic_form(MatrixQ(2, {{1, 1}, {1, 1}})), InvalidArgument);

  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ r = random_matrix(13, 4, 9, rng);
    if (rank(submatrix(r, 0, 0, 4, 4)) < 4) continue;
    const auto s = systematic_form(r);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(submatrix(s->generator, 0, 0, 4, 4), MatrixQ::identity(13, 4));
    EXPECT_EQ(multiply(s->transform, r), s->generator);
  }
}

TEST(RandomInvertible, SmallCases) {
  Rng rng(5);
  EXPECT_EQ(random_invertible(2, 1, rng), MatrixQ::identity(2, 1));
  // GL_2(F_2) by enumeration.
  std::set<std::vector<Fq>> gl2;
  for (int bits = 0; bits < 16; ++bits) {
    const int a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1, d = (bits >> 3) & 1;
    if ((a * d + b * c) % 2 == 1) {
      gl2.insert({static_cast<Fq>(a), static_cast<Fq>(b), static_cast<Fq>(c), static_cast<Fq>(d)});
    }
  }
  ASSERT_EQ(gl2.size(), 6u);
  std::set<std::vector<Fq>> seen;
  for (int trial = 0; trial < 200; ++trial) {
    const MatrixQ a = random_invertible(2, 2, rng);
    const std::vector<Fq> entries(a.data().begin(), a.data().end());
    EXPECT_TRUE(gl2.count(entries));
    seen.insert(entries);
  }
  EXPECT_EQ(seen, gl2);
  for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(rank(random_invertible(7, 5, rng)), 5u);
}

TEST(RandomRankT, ExactRank) {
  Rng rng(6);
  EXPECT_TRUE(is_zero(random_rank_t(2, 4, 3, 0, rng)));
  EXPECT_EQ(rank(random_rank_t(5, 4, 3, 3, rng)), 3u);
  for (int trial = 0; trial < 200; ++trial) EXPECT_EQ(rank(random_rank_t(2, 4, 3, 2, rng)), 2u);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t t = rng.uniform(4);
    EXPECT_EQ(rank(random_rank_t(3, 6, 5, t, rng)), t);
  }
  EXPECT_THROW(random_rank_t(2, 2, 3, 3, rng), InvalidArgument);
}

TEST(KronIdentity, Structure) {
  const MatrixQ a(2, {{1, 1}, {0, 1}});
  EXPECT_EQ(kron_identity(1, a), a);
  EXPECT_EQ(kron_identity(3, MatrixQ::identity(2, 2)), MatrixQ::identity(2, 6));
  const MatrixQ k = kron_identity(2, a);
  EXPECT_EQ(k, MatrixQ(2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  EXPECT_EQ(rank(k), 4u);

  Rng rng(7);
  const MatrixQ x = random_matrix(5, 3, 3, rng), y = random_matrix(5, 3, 3, rng);
  EXPECT_EQ(multiply(kron_identity(4, x), kron_identity(4, y)), kron_identity(4, multiply(x, y)));
  const MatrixQ inv = random_invertible(5, 3, rng);
  EXPECT_EQ(*inverse(kron_identity(3, inv)), kron_identity(3, *inverse(inv)));
}

TEST(BlockDiagonalAndPower, Basics) {
  const MatrixQ a(3, {{1, 2}, {0, 1}});
  const MatrixQ b(3, {{2}});
  EXPECT_EQ(block_diagonal(a, b), MatrixQ(3, {{1, 2, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(power(a, 0), MatrixQ::identity(3, 2));
  EXPECT_EQ(power(a, 3), multiply(a, multiply(a, a)));
  EXPECT_EQ(power(a, 3), MatrixQ::identity(3, 2));
}

// Counts v-dimensional subspaces of F_2^u by counting ordered bases.
std::uint64_t count_subspaces_f2(unsigned u, unsigned v) {
  const std::uint64_t total = 1u << u;
  // Ordered independent v-tuples, counted by brute force for v <= 2.
  std::uint64_t tuples = 0;
  if (v == 1) {
    tuples = total - 1;
  } else {
    for (std::uint64_t x = 1; x < total; ++x) {
      for (std::uint64_t y = 1; y < total; ++y) tuples += (y != x);
    }
  }
  const std::uint64_t gl = v == 1 ? 1 : 6;
  return tuples / gl;
}

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(7, 0, 3), 1);
  EXPECT_EQ(gaussian_binomial(7, 7, 3), 1);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  for (unsigned u = 2; u <= 6; ++u) {
    EXPECT_EQ(gaussian_binomial(u, 1, 2), count_subspaces_f2(u, 1));
    EXPECT_EQ(gaussian_binomial(u, 2, 2), count_subspaces_f2(u, 2));
  }
  EXPECT_THROW(gaussian_binomial(2, 3, 2), InvalidArgument);
}

TEST(SubspaceProb, Values) {
  EXPECT_DOUBLE_EQ(subspace_prob_log2(10, 4, 0, 2), 0.0);
  EXPECT_DOUBLE_EQ(subspace_prob_log2(10, 10, 3, 2), 0.0);
  EXPECT_NEAR(subspace_prob_log2(20, 12, 3, 2), -24.0, 0.5);
  for (const auto& [u, v, w] : std::vector<std::array<unsigned, 3>>{{31, 12, 6}, {40, 20, 8}, {25, 10, 5}}) {
    for (const unsigned q : {2u, 7u, 13u}) {
      const double asym = -static_cast<double>(w * (u - v)) * std::log2(static_cast<double>(q));
      EXPECT_NEAR(subspace_prob_log2(u, v, w, q), asym, 1.0);
    }
  }
  EXPECT_THROW(subspace_prob_log2(5, 6, 1, 2), InvalidArgument);
}

TEST(MatrixQm, KernelAndRank) {
  Rng rng(8);
  const auto f = make_ext_field(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixQm m(*f, 2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = f->random(rng);
    }
    const MatrixQm k = right_kernel(*f, m);
    EXPECT_EQ(k.rows() + rank(*f, m), 4u);
    const MatrixQm prod = multiply(*f, m, transpose(k));
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_TRUE(prod(i, j).is_zero());
    }
    EXPECT_EQ(rref(*f, rref(*f, m).reduced).reduced, rref(*f, m).reduced);
  }
}

TEST(MatrixQm, CoordinateMatrix) {
  const auto f = make_ext_field(2, 2);
  const ExtElem w = f->generator();
  const MatrixQ c = coordinate_matrix(*f, std::vector<ExtElem>{f->one(), w});
  EXPECT_EQ(c, MatrixQ::identity(2, 2));
}

}  // namespace
}  // namespace xgab
