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

#include "hyperpf/compose.hpp"

namespace hyperpf {

void check_composition_shape(int k, int n, int p) {
  if (k <= 0 || n <= 0 || p <= 0 || k % 2 != 0 || n % 2 != 0 || p % 2 != 0) {
    throw InvalidArgument("k, n and p must be positive even integers");
  }
  if (n % k != 0) throw InvalidArgument("n must be a multiple of k");
  if (p % n != 0) throw InvalidArgument("p must be a multiple of n");
  check_shape(p, k);
}

Rational composition_constant(int k, int n, int p) {
  check_composition_shape(k, n, p);
  const auto groups = static_cast<unsigned>(p / n);
  const Integer block_factorial = factorial(static_cast<unsigned>(n / k));
  Integer denominator = factorial(groups);
  for (unsigned i = 0; i < groups; ++i) denominator *= block_factorial;
  const Integer numerator = factorial(static_cast<unsigned>(p / k));
  if (numerator % denominator != 0) {
    throw std::logic_error("composition constant is not an integer");
  }
  return Rational(numerator / denominator);
}

}  // namespace hyperpf
