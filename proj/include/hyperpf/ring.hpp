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

// Coefficient-ring glue shared by the exterior algebra and the
// hyperpfaffian evaluators, so that both run over exact scalars
// (Rational) and over polynomials.

#include "hyperpf/polynomial.hpp"
#include "hyperpf/rational.hpp"

namespace hyperpf {

/// acc += multiplier * a * b
inline void accumulate_product(Rational& acc, const Rational& a, const Rational& b,
                               int multiplier) {
  if (multiplier == 1) {
    acc += a * b;
  } else if (multiplier == -1) {
    acc -= a * b;
  } else {
    acc += multiplier * (a * b);
  }
}

inline void accumulate_product(Polynomial& acc, const Polynomial& a, const Polynomial& b,
                               int multiplier) {
  acc.add_product(a, b, Rational(multiplier));
}

inline void accumulate_product(ProductSum& acc, const Polynomial& a, const Polynomial& b,
                               int multiplier) {
  acc.add_product(a, b, multiplier);
}

/// Where sums of products of V are collected before being read back.
template <class V>
struct AccumulatorFor {
  using type = V;
};
template <>
struct AccumulatorFor<Polynomial> {
  using type = ProductSum;
};
template <class V>
using Accumulator = typename AccumulatorFor<V>::type;

inline Rational finish(const Rational& v) { return v; }
inline Polynomial finish(const ProductSum& v) { return v.result(); }

}  // namespace hyperpf
