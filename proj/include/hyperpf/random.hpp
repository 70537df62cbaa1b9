/*
 * Copyright 2026 The hyperpf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "hyperpf/combinat.hpp"
#include "hyperpf/rational.hpp"

namespace hyperpf {

/// 64-bit linear congruential generator (Knuth's MMIX constants).  Each
/// draw advances state = state * 6364136223846793005 + 1442695040888963407
/// and returns the top 31 bits.  Fixed so seeded runs are reproducible
/// across platforms and implementations.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>(state_ >> 33);
  }

  /// Uniform on [lo, hi] (modulo reduction).
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint32_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

  /// Uniform on {-9, ..., -1, 1, ..., 9}.
  int nonzero_digit() {
    const int v = uniform(0, 17);
    return v < 9 ? v - 9 : v - 8;
  }

  /// nonzero_digit() / uniform(1, 4)
  Rational small_rational() {
    const int num = nonzero_digit();
    const int den = uniform(1, 4);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  /// Fisher-Yates shuffle of the identity on {1, ..., m}.
  Permutation permutation(int m) {
    std::vector<int> images(static_cast<std::size_t>(m));
    std::iota(images.begin(), images.end(), 1);
    for (int i = m - 1; i > 0; --i) {
      std::swap(images[static_cast<std::size_t>(i)],
                images[static_cast<std::size_t>(uniform(0, i))]);
    }
    return Permutation(std::move(images));
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperpf
