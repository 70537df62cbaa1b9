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

#include <stdexcept>
#include <vector>

#include "hyperpf/combinat.hpp"
#include "hyperpf/error.hpp"
#include "hyperpf/hyperpfaffian.hpp"

namespace hyperpf {

/// Checks k | n | p with all three even and positive.
void check_composition_shape(int k, int n, int p);

/// (1 / (p/n)!) * multinomial(p/k; n/k, ..., n/k), an integer.
Rational composition_constant(int k, int n, int p);

/// g(B) = order-n hyperpfaffian of f restricted to B, for every sorted
/// n-subset B of [p] (f lives on [p] with arity k).
template <class V>
SkewFunction<V> build_g(const SkewFunction<V>& f, int n) {
  const int k = f.k();
  const int p = f.n();
  check_composition_shape(k, n, p);
  const std::vector<Subset> local_subsets = k_subsets(n, k);
  SkewFunction<V> g(p, n);
  for (Subset big : k_subsets(p, n)) {
    const std::vector<int> members = elements_of(big);
    SkewFunction<V> restricted(n, k);
    for (Subset local : local_subsets) {
      std::vector<int> image;
      for (int e : elements_of(local)) image.push_back(members[static_cast<std::size_t>(e - 1)]);
      restricted.set(local, f.at(subset_of(image)));
    }
    g.set(big, pf_definition(restricted));
  }
  return g;
}

template <class V>
struct CompositionReport {
  Rational constant;
  V lhs;  // Pf(g)
  V rhs;  // constant * Pf(f)
  bool holds = false;
};

template <class V>
CompositionReport<V> verify_composition(const SkewFunction<V>& f, int n) {
  CompositionReport<V> report;
  report.constant = composition_constant(f.k(), n, f.n());
  report.lhs = pf_definition(build_g(f, n));
  report.rhs = pf_definition(f);
  report.rhs *= report.constant;
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace hyperpf
