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

#include "xgab/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace xgab::kernels {

namespace {

// Below this many multiply-adds per elimination step the OpenMP fork costs
// more than it saves.
constexpr std::size_t kParallelThreshold = 1 << 14;

void swap_rows(std::span<Fq> data, std::size_t cols, std::size_t a,
               std::size_t b) {
  std::swap_ranges(data.begin() + a * cols, data.begin() + (a + 1) * cols,
                   data.begin() + b * cols);
}

}  // namespace

namespace serial {

std::vector<std::size_t> rref_inplace(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::span<Fq> data) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && data[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) swap_rows(data, cols, p, r);
    Fq* pivot_row = data.data() + r * cols;
    const std::uint32_t inv = inverse_mod(pivot_row[c], q);
    for (std::size_t j = c; j < cols; ++j) {
      pivot_row[j] = static_cast<Fq>(pivot_row[j] * inv % q);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Fq* row = data.data() + i * cols;
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint32_t nf = q - f;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = static_cast<Fq>((row[j] + nf * pivot_row[j]) % q);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void matmul(std::uint32_t q, std::size_t ra, std::size_t ca, std::size_t cb,
            std::span<const Fq> a, std::span<const Fq> b, std::span<Fq> c) {
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < cb; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < ca; ++l) {
        acc += std::uint64_t{a[i * ca + l]} * b[l * cb + j];
      }
      c[i * cb + j] = static_cast<Fq>(acc % q);
    }
  }
}

}  // namespace serial

namespace parallel {

std::vector<std::size_t> rref_inplace(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::span<Fq> data) {
  const FastMod mod(q);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && data[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) swap_rows(data, cols, p, r);
    Fq* const pivot_row = data.data() + r * cols;
    const std::uint32_t inv = inverse_mod(pivot_row[c], q);
    if (inv != 1) {
      for (std::size_t j = c; j < cols; ++j) {
        pivot_row[j] = static_cast<Fq>(mod(pivot_row[j] * inv));
      }
    }
    const std::size_t width = cols - c;
    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
    const auto pivot_index = static_cast<std::ptrdiff_t>(r);
    Fq* const base = data.data();
#pragma omp parallel for schedule(static) if (rows * width > kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
      if (i == pivot_index) continue;
      Fq* const row = base + static_cast<std::size_t>(i) * cols;
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint32_t nf = q - f;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = static_cast<Fq>(mod(row[j] + nf * pivot_row[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void matmul(std::uint32_t q, std::size_t ra, std::size_t ca, std::size_t cb,
            std::span<const Fq> a, std::span<const Fq> b, std::span<Fq> c) {
  const auto n_rows = static_cast<std::ptrdiff_t>(ra);
#pragma omp parallel if (ra * ca * cb > kParallelThreshold)
  {
    std::vector<std::uint64_t> acc(cb);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Fq* const a_row = a.data() + static_cast<std::size_t>(i) * ca;
      for (std::size_t l = 0; l < ca; ++l) {
        const std::uint64_t f = a_row[l];
        if (f == 0) continue;
        const Fq* const b_row = b.data() + l * cb;
        for (std::size_t j = 0; j < cb; ++j) acc[j] += f * b_row[j];
      }
      Fq* const c_row = c.data() + static_cast<std::size_t>(i) * cb;
      for (std::size_t j = 0; j < cb; ++j) {
        c_row[j] = static_cast<Fq>(acc[j] % q);
      }
    }
  }
}

}  // namespace parallel

}  // namespace xgab::kernels
