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

// Hot loops of the F_q linear algebra. Each kernel exists twice: an OpenMP
// version used by the library and a plain serial reference that the tests
// compare it against.

#ifndef XGAB_KERNELS_HPP_
#define XGAB_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xgab/gf.hpp"

namespace xgab::kernels {

/// Precomputed reciprocal for reducing 32-bit values mod a fixed q.
class FastMod {
 public:
  explicit FastMod(std::uint32_t q)
      : q_(q), magic_(~std::uint64_t{0} / q + 1) {}
  std::uint32_t q() const { return q_; }
  std::uint32_t operator()(std::uint32_t a) const {
    const std::uint64_t low = magic_ * a;
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(low) * q_) >> 64);
  }

 private:
  std::uint32_t q_;
  std::uint64_t magic_;
};

/// In-place reduced row echelon form of a rows x cols row-major matrix.
/// Returns the pivot columns.
namespace serial {
std::vector<std::size_t> rref_inplace(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::span<Fq> data);
/// c (ra x cb) = a (ra x ca) * b (ca x cb)
void matmul(std::uint32_t q, std::size_t ra, std::size_t ca, std::size_t cb,
            std::span<const Fq> a, std::span<const Fq> b, std::span<Fq> c);
}  // namespace serial

namespace parallel {
std::vector<std::size_t> rref_inplace(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::span<Fq> data);
void matmul(std::uint32_t q, std::size_t ra, std::size_t ca, std::size_t cb,
            std::span<const Fq> a, std::span<const Fq> b, std::span<Fq> c);
}  // namespace parallel

}  // namespace xgab::kernels

#endif  // XGAB_KERNELS_HPP_
