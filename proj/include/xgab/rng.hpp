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

#ifndef XGAB_RNG_HPP_
#define XGAB_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace xgab {

/// Seeded randomness source.
///
/// The stream is std::mt19937_64 (fully specified by the C++ standard) and
/// bounded integers are drawn by rejection from its raw 64-bit output, so a
/// given seed yields the same values on every conforming platform. The
/// standard distributions are deliberately not used: their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xgab

#endif  // XGAB_RNG_HPP_
