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

#include "hyperpf/hyperpfaffian.hpp"

#include <numeric>

namespace hyperpf {

SkewSpec::SkewSpec(int n, int k) : SkewSpec(n, k, theorem_degree(n, k)) {}

SkewSpec::SkewSpec(int n, int k, int degree) : n_(n), k_(k), degree_(degree) {
  check_shape(n, k);
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
}

void SkewSpec::set(const Composition& r, const Rational& a) {
  if (r.size() != k_) {
    throw InvalidArgument("tuple (" + r.to_string() + ") does not have " + std::to_string(k_) +
                          " parts");
  }
  if (!r.is_strictly_increasing()) {
    throw InvalidArgument("tuple (" + r.to_string() + ") is not strictly increasing");
  }
  if (r.sum() != degree_) {
    throw InvalidArgument("tuple (" + r.to_string() + ") does not sum to degree " +
                          std::to_string(degree_));
  }
  if (is_zero(a)) {
    terms_.erase(r);
  } else {
    terms_.insert_or_assign(r, a);
  }
}

Rational SkewSpec::coefficient(const Composition& r) const {
  const auto it = terms_.find(r);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial skew_expand(const SkewSpec& spec) {
  const int k = spec.k();
  Polynomial out;
  std::vector<int> order(static_cast<std::size_t>(k));
  for (const auto& [r, a] : spec.terms()) {
    std::iota(order.begin(), order.end(), 0);
    do {
      Monomial m;
      for (int j = 0; j < k; ++j) {
        m.set_exponent(static_cast<unsigned>(j + 1),
                       static_cast<unsigned>(r[order[static_cast<std::size_t>(j)]]));
      }
      out.add_term(m, sequence_sign(order) > 0 ? a : Rational(-a));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

Polynomial instantiate(const Polynomial& f, int k, std::span<const int> block) {
  if (static_cast<int>(block.size()) != k) {
    throw InvalidArgument("instantiate: block has " + std::to_string(block.size()) +
                          " elements, expected " + std::to_string(k));
  }
  if (std::adjacent_find(block.begin(), block.end(), std::greater_equal<>()) != block.end()) {
    throw InvalidArgument("instantiate: block must be strictly increasing");
  }
  if (static_cast<int>(f.max_variable()) > k) {
    throw InvalidArgument("instantiate: polynomial uses variables beyond x" + std::to_string(k));
  }
  std::vector<unsigned> target(block.begin(), block.end());
  return f.rename_variables(target);
}

Polynomial instantiate(const SkewSpec& spec, std::span<const int> block) {
  return instantiate(skew_expand(spec), spec.k(), block);
}

SkewFunction<Polynomial> skew_function(const Polynomial& f, int n, int k) {
  return SkewFunction<Polynomial>::from_generator(
      n, k, [&](const std::vector<int>& block) { return instantiate(f, k, block); });
}

SkewFunction<Polynomial> skew_function(const SkewSpec& spec) {
  return skew_function(skew_expand(spec), spec.n(), spec.k());
}

SkewFunction<Rational> skew_function_at(const SkewSpec& spec, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) < spec.n()) {
    throw UnassignedVariable("evaluation point has fewer than n coordinates");
  }
  const Polynomial f = skew_expand(spec);
  return SkewFunction<Rational>::from_generator(
      spec.n(), spec.k(), [&](const std::vector<int>& block) {
        std::vector<Rational> local;
        local.reserve(block.size());
        for (int b : block) local.push_back(point[static_cast<std::size_t>(b - 1)]);
        return f.evaluate(local);
      });
}

namespace {

void require_theorem_degree(const SkewSpec& spec) {
  if (!spec.has_theorem_degree()) {
    throw InvalidArgument("closed form needs degree " +
                          std::to_string(theorem_degree(spec.n(), spec.k())) + ", spec has " +
                          std::to_string(spec.degree()));
  }
}

}  // namespace

Rational theorem_coefficient(const SkewSpec& spec) {
  require_theorem_degree(spec);
  Rational total = 0;
  for_each_composition_set(spec.n(), spec.k(), [&](const CompositionSet& beta) {
    Rational product = beta_sign(beta);
    for (const Composition& r : beta.compositions()) {
      product *= spec.coefficient(r);
      if (is_zero(product)) return;
    }
    total += product;
  });
  return total;
}

Polynomial pf_closed_form(const SkewSpec& spec) {
  return theorem_coefficient(spec) * vandermonde(static_cast<unsigned>(spec.n()));
}

Rational pf_closed_form_at(const SkewSpec& spec, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) < spec.n()) {
    throw UnassignedVariable("evaluation point has fewer than n coordinates");
  }
  Rational value = theorem_coefficient(spec);
  for (int j = 1; j < spec.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      value *= point[static_cast<std::size_t>(j)] - point[static_cast<std::size_t>(i)];
    }
  }
  return value;
}

Rational torelli_constant(int n) {
  if (n <= 0 || n % 2 != 0) {
    throw InvalidArgument("Torelli constant needs a positive even n (got " + std::to_string(n) +
                          ")");
  }
  const unsigned half = static_cast<unsigned>(n / 2);
  Integer product = binomial(half, 2) % 2 == 0 ? 1 : -1;
  for (unsigned i = 0; i < half; ++i) product *= binomial(static_cast<unsigned>(n - 1), i);
  return Rational(product);
}

SkewSpec torelli_spec(int n) {
  SkewSpec spec(n, 2);
  for (int i = 0; i < n / 2; ++i) {
    Integer a = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i));
    if (i % 2 != 0) a = -a;
    spec.set(Composition({i, n - 1 - i}), Rational(a));
  }
  return spec;
}

SkewSpec random_spec(int n, int k, int degree, Lcg& rng) {
  SkewSpec spec(n, k, degree);
  for (const Composition& r : enumerate_increasing_compositions(k, degree)) {
    spec.set(r, rng.nonzero_digit());
  }
  return spec;
}

SkewSpec random_spec(int n, int k, Lcg& rng) {
  return random_spec(n, k, theorem_degree(n, k), rng);
}

SkewFunction<Rational> random_skew_function(int n, int k, Lcg& rng) {
  return SkewFunction<Rational>::from_generator(
      n, k, [&](const std::vector<int>&) { return rng.small_rational(); });
}

}  // namespace hyperpf
