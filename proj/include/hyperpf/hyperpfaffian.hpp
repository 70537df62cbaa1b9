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

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hyperpf/combinat.hpp"
#include "hyperpf/error.hpp"
#include "hyperpf/exterior.hpp"
#include "hyperpf/polynomial.hpp"
#include "hyperpf/random.hpp"
#include "hyperpf/rational.hpp"
#include "hyperpf/ring.hpp"

namespace hyperpf {

/// Skew-symmetric k-ary polynomial of homogeneous degree `degree`, stored
/// by its coefficients a_r on strictly increasing k-tuples r.  The full
/// polynomial is sum_r sum_{sigma in S_k} sign(sigma) a_r x^{sigma(r)}.
class SkewSpec {
 public:
  /// Degree defaults to k/2 * (n - 1).
  SkewSpec(int n, int k);
  SkewSpec(int n, int k, int degree);

  int n() const { return n_; }
  int k() const { return k_; }
  int degree() const { return degree_; }
  bool has_theorem_degree() const { return degree_ == theorem_degree(n_, k_); }

  /// Sets a_r; a zero value removes the key.  Throws InvalidArgument if r
  /// is not a strictly increasing k-tuple summing to degree().
  void set(const Composition& r, const Rational& a);
  /// a_r, or 0 for keys that were never set.
  Rational coefficient(const Composition& r) const;

  const std::map<Composition, Rational>& terms() const { return terms_; }

  bool operator==(const SkewSpec&) const = default;

 private:
  int n_;
  int k_;
  int degree_;
  std::map<Composition, Rational> terms_;
};

/// Values f(B) on the sorted k-subsets B of [n]; other argument orders are
/// implied by skew-symmetry.  Unset subsets read as zero.
template <class V>
class SkewFunction {
 public:
  SkewFunction(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

  template <class Fn>
  static SkewFunction from_generator(int n, int k, Fn&& fn) {
    SkewFunction f(n, k);
    for (Subset s : k_subsets(n, k)) f.set(s, fn(elements_of(s)));
    return f;
  }

  int n() const { return n_; }
  int k() const { return k_; }

  void set(Subset s, V value) {
    if (std::popcount(s) != k_ || (s >> n_) != 0) {
      throw InvalidArgument("skew function argument must be a " + std::to_string(k_) +
                            "-subset of [" + std::to_string(n_) + "]");
    }
    values_.insert_or_assign(s, std::move(value));
  }

  const V& at(Subset s) const {
    const auto it = values_.find(s);
    return it == values_.end() ? zero_ : it->second;
  }

  /// f(i_1, ..., i_k) for arbitrary argument order; zero on repeats.
  V value(std::span<const int> args) const {
    if (static_cast<int>(args.size()) != k_) throw InvalidArgument("wrong arity");
    std::vector<int> sorted(args.begin(), args.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return V(0);
    V out = at(subset_of(sorted));
    if (sequence_sign(args) < 0) out = -out;
    return out;
  }

  const std::unordered_map<Subset, V>& values() const { return values_; }

 private:
  int n_;
  int k_;
  std::unordered_map<Subset, V> values_;
  V zero_{0};
};

/// Expands a spec into its k-variable polynomial in x_1, ..., x_k.
Polynomial skew_expand(const SkewSpec& spec);

/// f with x_j replaced by x_{block[j-1]}.  `block` must be strictly
/// increasing of size k, and f may only use x_1..x_k.
Polynomial instantiate(const Polynomial& f, int k, std::span<const int> block);
Polynomial instantiate(const SkewSpec& spec, std::span<const int> block);

/// B -> f(x_B) for every sorted k-subset B of [n].
SkewFunction<Polynomial> skew_function(const Polynomial& f, int n, int k);
SkewFunction<Polynomial> skew_function(const SkewSpec& spec);
/// B -> f(x_B) evaluated at x = point (point[i - 1] is the value of x_i).
SkewFunction<Rational> skew_function_at(const SkewSpec& spec, std::span<const Rational> point);

/// sum over tau in Pi_{n,k} of sign(tau) * prod_i f(B_i).
template <class V>
V pf_definition(const SkewFunction<V>& f) {
  Accumulator<V> total{};
  for_each_partition(f.n(), f.k(), [&](const EqualBlockPartition& tau) {
    const std::vector<Subset> blocks = tau.subsets();
    V prefix(1);
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) prefix = prefix * f.at(blocks[i]);
    accumulate_product(total, prefix, f.at(blocks.back()), partition_sign(tau));
  });
  return finish(total);
}

/// sum_S f(S) t_S over all k-subsets S of [n].
template <class V>
ExteriorElement<V> exterior_element(const SkewFunction<V>& f) {
  ExteriorElement<V> a(f.n());
  for (const auto& [s, v] : f.values()) a.add(s, v);
  return a;
}

namespace detail {

inline void lcm_denominators(Integer& acc, const Rational& v) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_den_mpz_t());
}

inline void lcm_denominators(Integer& acc, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) lcm_denominators(acc, c);
}

inline bool divides(const Integer& d, const Rational& v) {
  return mpz_divisible_p(v.get_num_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool divides(const Integer& d, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (!divides(d, c)) return false;
  }
  return true;
}

}  // namespace detail

/// Coefficient of t_{[n]} in (sum_S f(S) t_S)^{n/k}, divided by (n/k)!.
/// Denominators are cleared first, so the division is always checked to be
/// exact.
template <class V>
V pf_exterior(const SkewFunction<V>& f) {
  check_shape(f.n(), f.k());
  const auto m = static_cast<unsigned>(f.n() / f.k());
  Integer d = 1;
  for (const auto& [s, v] : f.values()) detail::lcm_denominators(d, v);
  ExteriorElement<V> a(f.n());
  for (const auto& [s, v] : f.values()) a.add(s, v * Rational(d));
  V top = top_coefficient(wedge_power(a, m));
  const Integer mf = factorial(m);
  if (!detail::divides(mf, top)) {
    throw std::logic_error("top exterior coefficient not divisible by (n/k)!");
  }
  Integer dm;
  mpz_pow_ui(dm.get_mpz_t(), d.get_mpz_t(), m);
  top /= Rational(mf * dm);
  return top;
}

/// sum over beta in R_{n,k} of sign(beta) * prod_i a_{r_i}.  Requires
/// degree k/2 * (n - 1).
Rational theorem_coefficient(const SkewSpec& spec);
/// theorem_coefficient(spec) * vandermonde(n).
Polynomial pf_closed_form(const SkewSpec& spec);
/// Closed form evaluated at x = point.
Rational pf_closed_form_at(const SkewSpec& spec, std::span<const Rational> point);

/// (-1)^{C(n/2, 2)} * prod_{i < n/2} C(n - 1, i).  n must be even.
Rational torelli_constant(int n);
/// The k = 2 spec of (x_2 - x_1)^{n-1}: a_{(i, n-1-i)} = (-1)^i C(n-1, i).
SkewSpec torelli_spec(int n);

/// g(i_1..i_k) = f(sigma(i_1)..sigma(i_k)).  Pf(g) = sign(sigma) Pf(f).
template <class V>
SkewFunction<V> relabel(const SkewFunction<V>& f, const Permutation& sigma) {
  if (sigma.size() != f.n()) throw InvalidArgument("relabel: permutation size must equal n");
  SkewFunction<V> g(f.n(), f.k());
  for (Subset s : k_subsets(f.n(), f.k())) {
    std::vector<int> image;
    for (int e : elements_of(s)) image.push_back(sigma(e));
    g.set(s, f.value(image));
  }
  return g;
}

/// Uniform nonzero integer coefficients in [-9, 9] on every increasing
/// k-tuple of the given degree, drawn in lexicographic order.
SkewSpec random_spec(int n, int k, int degree, Lcg& rng);
SkewSpec random_spec(int n, int k, Lcg& rng);

/// Skew function with a small random rational on every sorted k-subset.
SkewFunction<Rational> random_skew_function(int n, int k, Lcg& rng);

}  // namespace hyperpf
