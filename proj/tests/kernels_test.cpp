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

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>
#include <omp.h>

#include "xgab/kernels.hpp"
#include "xgab/matq.hpp"
#include "xgab/rng.hpp"

namespace xgab {
namespace {

std::vector<Fq> random_data(std::uint32_t q, std::size_t count, Rng& rng) {
  std::vector<Fq> out(count);
  for (auto& v : out) v = static_cast<Fq>(rng.uniform(q));
  return out;
}

class KernelsTest : public ::testing::TestWithParam<std::uint32_t> {
 protected:
  void SetUp() override { omp_set_num_threads(4); }
};

TEST_P(KernelsTest, FastModMatchesModulo) {
  const std::uint32_t q = GetParam();
  const kernels::FastMod mod(q);
  Rng rng(q);
  for (int i = 0; i < 100000; ++i) {
    const auto a = static_cast<std::uint32_t>(rng.next());
    ASSERT_EQ(mod(a), a % q);
  }
  ASSERT_EQ(mod(0), 0u);
  ASSERT_EQ(mod(0xffffffffu), 0xffffffffu % q);
}

TEST_P(KernelsTest, RrefParallelMatchesSerial) {
  const std::uint32_t q = GetParam();
  Rng rng(q + 1);
  for (const auto& [rows, cols] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 1}, {5, 9}, {40, 40}, {150, 260}, {300, 120}}) {
    auto a = random_data(q, rows * cols, rng);
    // Zero the last two rows so some inputs are rank deficient.
    if (rows > 3) std::fill(a.end() - static_cast<std::ptrdiff_t>(2 * cols), a.end(), Fq{0});
    auto b = a;
    const auto pa = kernels::serial::rref_inplace(q, rows, cols, a);
    const auto pb = kernels::parallel::rref_inplace(q, rows, cols, b);
    EXPECT_EQ(pa, pb);
    EXPECT_EQ(a, b);
  }
}

TEST_P(KernelsTest, MatmulParallelMatchesSerial) {
  const std::uint32_t q = GetParam();
  Rng rng(q + 2);
  for (const auto& [ra, ca, cb] : std::vector<std::array<std::size_t, 3>>{
           {1, 1, 1}, {7, 3, 5}, {64, 64, 64}, {200, 150, 180}}) {
    const auto a = random_data(q, ra * ca, rng);
    const auto b = random_data(q, ca * cb, rng);
    std::vector<Fq> c1(ra * cb), c2(ra * cb);
    kernels::serial::matmul(q, ra, ca, cb, a, b, c1);
    kernels::parallel::matmul(q, ra, ca, cb, a, b, c2);
    EXPECT_EQ(c1, c2);
  }
}

TEST_P(KernelsTest, SerialMatmulMatchesNaiveSum) {
  const std::uint32_t q = GetParam();
  Rng rng(q + 3);
  const std::size_t ra = 6, ca = 5, cb = 4;
  const auto a = random_data(q, ra * ca, rng);
  const auto b = random_data(q, ca * cb, rng);
  std::vector<Fq> c(ra * cb);
  kernels::serial::matmul(q, ra, ca, cb, a, b, c);
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < cb; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < ca; ++l) s += std::uint64_t{a[i * ca + l]} * b[l * cb + j];
      EXPECT_EQ(c[i * cb + j], s % q);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, KernelsTest, ::testing::Values(2u, 3u, 13u, 251u, 65521u));

}  // namespace
}  // namespace xgab
