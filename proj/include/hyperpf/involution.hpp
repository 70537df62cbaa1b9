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
#include <functional>
#include <string>
#include <vector>

#include "hyperpf/combinat.hpp"
#include "hyperpf/hyperpfaffian.hpp"
#include "hyperpf/polynomial.hpp"

namespace hyperpf {

/// Oriented partition of [n] whose i-th block carries a weight vector
/// w_i in Gamma_{n,k}; element c_{i,j} gets weight w_i[j].
class WeightedOrientedPartition {
 public:
  /// `weights[i]` belongs to `blocks[i]`; blocks may be given in any order
  /// and are reordered canonically together with their weights.
  WeightedOrientedPartition(int n, int k, std::vector<Block> blocks,
                            std::vector<Composition> weights);

  int n() const { return partition_.n(); }
  int k() const { return partition_.k(); }
  const OrientedPartition& partition() const { return partition_; }
  const std::vector<Composition>& weights() const { return weights_; }

  int weight_of(int element) const;
  int sign() const { return oriented_sign(partition_); }
  /// c(rho) = prod_i a_{w_i}
  Rational coefficient(const SkewSpec& spec) const;
  /// w(rho) = prod_i prod_j x_{c_{i,j}}^{w_i[j]}
  Monomial monomial() const;

  /// Block-ordered rendering, "x9^1 x1^4 x2^5 x4^12 * x5^0 ...".
  std::string describe_monomial() const;
  /// "a_{1,4,5,12} a_{0,1,7,14} a_{2,4,6,10}"
  std::string describe_coefficient() const;

  bool operator==(const WeightedOrientedPartition&) const = default;

 private:
  struct Trusted {};
  WeightedOrientedPartition(Trusted, OrientedPartition partition,
                            std::vector<Composition> weights);
  friend void for_each_weighted(int, int,
                                const std::function<void(const WeightedOrientedPartition&)>&,
                                bool);

  OrientedPartition partition_;
  std::vector<Composition> weights_;
  std::vector<int> element_weight_;  // indexed by element - 1
};

/// |T_{n,k}| * |Gamma_{n,k}|^{n/k}
Integer weighted_count(int n, int k);

/// Enumerates W_{n,k}.  Without `force`, refuses n > 6 for k = 2 and
/// n > 8 otherwise (SizeLimitExceeded, message carries the size).
void for_each_weighted(int n, int k,
                       const std::function<void(const WeightedOrientedPartition&)>& visit,
                       bool force = false);
std::vector<WeightedOrientedPartition> enumerate_W(int n, int k, bool force = false);

enum class WeightClass { repeated, distinct };

WeightClass classify(const WeightedOrientedPartition& w);

/// Swaps the lexicographically least pair i < j of equal weight.  Throws
/// InvalidArgument when all weights are distinct.
WeightedOrientedPartition phi(const WeightedOrientedPartition& w);

struct DistinctDecomposition {
  Permutation sigma;  // sigma(m) = weight of m, plus one
  CompositionSet beta;
};

/// Throws InvalidArgument on repeated weights.
DistinctDecomposition decompose_distinct(const WeightedOrientedPartition& w);
/// Inverse of decompose_distinct.
WeightedOrientedPartition assemble_distinct(const Permutation& sigma, const CompositionSet& beta);

enum class WeightFilter { all, repeated, distinct };

/// sum over rho in W_{n,k} (restricted by `filter`) of
/// sign(rho) * c(rho) * w(rho).  Needs degree k/2 * (n - 1).
Polynomial signed_weighted_sum(const SkewSpec& spec, WeightFilter filter = WeightFilter::all,
                               bool force = false);

/// Outcome of the exhaustive pairing checks over W_{n,k}.
struct InvolutionReport {
  std::uint64_t total = 0;
  std::uint64_t repeated = 0;
  std::uint64_t distinct = 0;
  Integer expected_distinct;  // n! |R_{n,k}|
  bool involutive = true;        // phi(phi(w)) == w
  bool fixed_point_free = true;  // phi(w) != w
  bool stays_repeated = true;    // classify(phi(w)) == repeated
  bool sign_reversing = true;
  bool preserves_coefficient = true;  // same multiset of weight vectors
  bool preserves_monomial = true;
  bool sign_factorization = true;  // sign(rho) = sign(beta) sign(sigma) on W^d
  bool bijective = true;           // assemble(decompose(w)) == w on W^d
  /// Signed counts per (weight vectors, monomial) class on W^r all vanish,
  /// so the W^r sum is zero for every choice of coefficients.
  bool repeated_sum_vanishes = true;

  bool ok() const;
};

InvolutionReport check_involution(int n, int k, bool force = false);

}  // namespace hyperpf
