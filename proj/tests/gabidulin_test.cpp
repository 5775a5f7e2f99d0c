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

#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "xgab/error.hpp"
#include "xgab/gabidulin.hpp"

namespace xgab {
namespace {

std::vector<ExtElem> random_rank_error(const ExtField& f, std::size_t n, std::size_t t,
                                       Rng& rng) {
  // Coordinates form an m x n matrix of rank t; column j is e_j.
  const MatrixQ e = random_rank_t(f.q(), f.m(), n, t, rng);
  std::vector<ExtElem> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Fq> c(f.m());
    for (std::size_t l = 0; l < f.m(); ++l) c[l] = e(l, j);
    out.push_back(f.element(std::move(c)));
  }
  return out;
}

GabidulinCode random_code(std::uint32_t q, std::size_t m, std::size_t n, std::size_t k,
                          Rng& rng) {
  auto f = make_ext_field(q, m);
  auto g = random_full_rank_vector(*f, n, rng);
  return GabidulinCode(f, std::move(g), k);
}

TEST(GabidulinCode, F4MooreRows) {
  const auto f = make_ext_field(2, 2);
  const ExtElem w = f->generator();
  const GabidulinCode c1(f, {f->one(), w}, 1);
  EXPECT_EQ(c1.generator(), MatrixQm(1, 2, {f->one(), w}));
  const GabidulinCode c2(f, {f->one(), w}, 2);
  EXPECT_EQ(c2.generator(), MatrixQm(2, 2, {f->one(), w, f->one(), f->mul(w, w)}));
}

TEST(GabidulinCode, RejectsBadInput) {
  const auto f = make_ext_field(3, 3);
  const ExtElem a = f->generator();
  EXPECT_THROW(GabidulinCode(f, {a, f->scale(a, 2)}, 1), InvalidArgument);
  EXPECT_THROW(GabidulinCode(f, {f->one(), a}, 3), InvalidArgument);
  const ExtElem a2 = f->mul(a, a);
  EXPECT_THROW(GabidulinCode(f, {f->one(), a, a2, f->add(a, a2)}, 1), InvalidArgument);
}

TEST(GabidulinCode, ParityCheckIsOrthogonal) {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const GabidulinCode c = random_code(7, 6, 5, 2, rng);
    EXPECT_EQ(c.parity_check().rows(), 3u);
    const MatrixQm prod = multiply(c.field(), c.generator(), transpose(c.parity_check()));
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_TRUE(prod(i, j).is_zero());
    }
    std::vector<ExtElem> s;
    for (int i = 0; i < 3; ++i) s.push_back(c.field().random(rng));
    EXPECT_EQ(c.syndrome(c.lift_syndrome(s)), s);
  }
}

TEST(RankWeight, Examples) {
  const auto f = make_ext_field(2, 2);
  EXPECT_EQ(rank_weight(*f, std::vector<ExtElem>(3, f->zero())), 0u);
  EXPECT_EQ(rank_weight(*f, std::vector<ExtElem>{f->one(), f->generator()}), 2u);
  const auto f8 = make_ext_field(2, 8);
  EXPECT_EQ(rank_weight(*f8, std::vector<ExtElem>(5, f8->one())), 1u);
}

TEST(DecodeSyndrome, ZeroSyndrome) {
  Rng rng(2);
  const GabidulinCode c = random_code(2, 8, 8, 4, rng);
  const auto e = decode_syndrome(c, std::vector<ExtElem>(4, c.field().zero()), 2);
  ASSERT_TRUE(e.has_value());
  for (const auto& x : *e) EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(decode_syndrome(c, std::vector<ExtElem>(4, c.field().zero()), 3),
               InvalidArgument);
}

struct Shape {
  std::uint32_t q;
  std::size_t m, n, k;
};

class DecodeRoundTrip : public ::testing::TestWithParam<Shape> {};

TEST_P(DecodeRoundTrip, RecoversInRadiusErrors) {
  const Shape s = GetParam();
  Rng rng(s.q * 1000 + s.m * 100 + s.n * 10 + s.k);
  const GabidulinCode c = random_code(s.q, s.m, s.n, s.k, rng);
  const std::size_t t = c.radius();
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t w = trial % (t + 1);
    const auto e = random_rank_error(c.field(), s.n, w, rng);
    const auto got = decode_syndrome(c, c.syndrome(e), t);
    ASSERT_TRUE(got.has_value()) << "trial " << trial;
    ASSERT_EQ(*got, e) << "trial " << trial;
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, DecodeRoundTrip,
                         ::testing::Values(Shape{2, 8, 8, 4}, Shape{3, 6, 6, 2},
                                           Shape{13, 6, 5, 1}, Shape{2, 7, 5, 3}));

TEST(DecodeSyndrome, MatchesExhaustiveCosetSearch) {
  // (2,4,4,2): all 16^4 words, grouped by syndrome; in-radius coset leaders
  // are unique, so the decoder must return exactly them and fail otherwise.
  Rng rng(3);
  const GabidulinCode c = random_code(2, 4, 4, 2, rng);
  const ExtField& f = c.field();
  std::map<std::vector<Fq>, std::vector<std::vector<ExtElem>>> leaders;
  std::size_t syndromes_seen = 0;
  std::map<std::vector<Fq>, bool> all;
  std::vector<ExtElem> e(4, f.zero());
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<Fq> coeffs(4);
      for (std::size_t l = 0; l < 4; ++l) coeffs[l] = (code >> (4 * j + l)) & 1;
      e[j] = f.element(coeffs);
    }
    const auto s = c.syndrome(e);
    std::vector<Fq> key;
    for (const auto& x : s) key.insert(key.end(), x.coeffs().begin(), x.coeffs().end());
    all[key] = true;
    if (rank_weight(f, e) <= 1) leaders[key].push_back(e);
  }
  ASSERT_EQ(all.size(), 256u);
  for (const auto& [key, unused] : all) {
    std::vector<ExtElem> s;
    for (std::size_t j = 0; j < 2; ++j) {
      s.push_back(f.element(std::vector<Fq>(key.begin() + 4 * j, key.begin() + 4 * j + 4)));
    }
    const auto got = decode_syndrome(c, s, 1);
    const auto it = leaders.find(key);
    if (it == leaders.end()) {
      EXPECT_FALSE(got.has_value());
    } else {
      ASSERT_EQ(it->second.size(), 1u);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, it->second.front());
    }
    ++syndromes_seen;
  }
  EXPECT_EQ(syndromes_seen, 256u);
}

TEST(DecodeSyndrome, BeyondRadiusNeverReturnsHeavyError) {
  Rng rng(4);
  const GabidulinCode c = random_code(2, 8, 8, 4, rng);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = random_rank_error(c.field(), 8, 4, rng);
    const auto got = decode_syndrome(c, c.syndrome(e), 2);
    if (got) {
      EXPECT_LE(rank_weight(c.field(), *got), 2u);
      EXPECT_EQ(c.syndrome(*got), c.syndrome(e));
    }
  }
}

TEST(Distance, MrdAndMdsAtSmallSize) {
  Rng rng(5);
  for (std::size_t k = 1; k <= 3; ++k) {
    const GabidulinCode c = random_code(2, 4, 4, k, rng);
    EXPECT_EQ(min_rank_distance_bruteforce(c), 4 - k + 1) << "k=" << k;
    EXPECT_EQ(min_hamming_distance_bruteforce(c), 4 - k + 1) << "k=" << k;
  }
  const GabidulinCode full = random_code(2, 4, 4, 4, rng);
  EXPECT_EQ(min_rank_distance_bruteforce(full), 1u);
  const GabidulinCode big = random_code(2, 8, 8, 4, rng);
  EXPECT_THROW(min_rank_distance_bruteforce(big), InvalidArgument);
}

TEST(DualCode, FrobeniusSumDimension) {
  // A Gabidulin dual satisfies dim(C + C^[1]) = dim(C) + 1.
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const GabidulinCode c = random_code(3, 6, 6, 3 + trial % 2, rng);
    const MatrixQm& h = c.parity_check();
    const MatrixQm stacked = vstack(h, frobenius(c.field(), h, 1));
    EXPECT_EQ(rank(c.field(), stacked), c.n() - c.k() + 1);
  }
}

}  // namespace
}  // namespace xgab
