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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperpf/rational.hpp"

namespace hyperpf {

/// Subset of [n] as a bitmask; element i occupies bit i - 1.
using Subset = std::uint32_t;

inline constexpr int kMaxOrder = 31;

Subset subset_of(std::span<const int> elements);
/// Elements of s in increasing order (1-based).
std::vector<int> elements_of(Subset s);

/// (-1)^{number of inversions} of a sequence of distinct values.
int sequence_sign(std::span<const int> values);

/// All k-element subsets of [n] in lexicographic order of their sorted
/// element lists.
std::vector<Subset> k_subsets(int n, int k);

/// A bijection of {1, ..., m} in one-line notation.
class Permutation {
 public:
  /// Throws InvalidArgument unless `images` is a permutation of 1..m.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  /// Shifts a permutation of {0, ..., m-1} to one of {1, ..., m}.
  static Permutation from_zero_based(std::span<const int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

int perm_sign(const Permutation& p);

/// Throws InvalidArgument unless k is positive and even, n is a positive
/// multiple of k, and n <= kMaxOrder.
void check_shape(int n, int k);

/// k/2 * (n - 1): the homogeneous degree the closed form requires.
int theorem_degree(int n, int k);

using Block = std::vector<int>;

/// Element of Pi_{n,k}: blocks sorted ascending, ordered by minimum.
class EqualBlockPartition {
 public:
  EqualBlockPartition(int n, int k, std::vector<Block> blocks);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  std::vector<int> concatenation() const;
  std::vector<Subset> subsets() const;

  bool operator==(const EqualBlockPartition&) const = default;

 private:
  struct Trusted {};
  EqualBlockPartition(Trusted, int n, int k, std::vector<Block> blocks)
      : n_(n), k_(k), blocks_(std::move(blocks)) {}
  friend void for_each_partition(int, int, const std::function<void(const EqualBlockPartition&)>&);

  int n_ = 0;
  int k_ = 0;
  std::vector<Block> blocks_;
};

int partition_sign(const EqualBlockPartition& tau);

/// Element of T_{n,k}: each block is an ordered k-tuple; blocks ordered
/// by the minimum of their underlying sets.
class OrientedPartition {
 public:
  OrientedPartition(int n, int k, std::vector<Block> blocks);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// pi(rho) = c_{1,1} ... c_{1,k} c_{2,1} ... c_{n/k,k}: every block, in
  /// canonical block order, none skipped.
  std::vector<int> concatenation() const;
  /// Forgets the orientation of every block.
  EqualBlockPartition underlying() const;

  bool operator==(const OrientedPartition&) const = default;

 private:
  struct Trusted {};
  OrientedPartition(Trusted, int n, int k, std::vector<Block> blocks)
      : n_(n), k_(k), blocks_(std::move(blocks)) {}
  friend void for_each_oriented(int, int, const std::function<void(const OrientedPartition&)>&);

  int n_ = 0;
  int k_ = 0;
  std::vector<Block> blocks_;
};

int oriented_sign(const OrientedPartition& rho);

/// A tuple of nonnegative parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int sum() const;
  bool is_strictly_increasing() const;

  /// "0,1,10,11"
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Element of R_{n,k}: n/k members of Gamma_{n,k} whose parts are exactly
/// {0, ..., n-1}, ordered by smallest part.
class CompositionSet {
 public:
  CompositionSet(int n, int k, std::vector<Composition> compositions);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Composition>& compositions() const { return compositions_; }

  /// pi(beta), a permutation of {0, ..., n-1}: every composition in order,
  /// concatenated in full.
  std::vector<int> concatenation() const;

  bool operator==(const CompositionSet&) const = default;

 private:
  struct Trusted {};
  CompositionSet(Trusted, int n, int k, std::vector<Composition> compositions)
      : n_(n), k_(k), compositions_(std::move(compositions)) {}
  friend void for_each_composition_set(int, int,
                                       const std::function<void(const CompositionSet&)>&);

  int n_ = 0;
  int k_ = 0;
  std::vector<Composition> compositions_;
};

int beta_sign(const CompositionSet& beta);

// Enumerators.  Each emits every element exactly once, in lexicographic
// order of the canonical representation.

void for_each_partition(int n, int k, const std::function<void(const EqualBlockPartition&)>& visit);
std::vector<EqualBlockPartition> enumerate_partitions(int n, int k);

void for_each_oriented(int n, int k, const std::function<void(const OrientedPartition&)>& visit);
std::vector<OrientedPartition> enumerate_oriented(int n, int k);

/// Strictly increasing k-tuples of nonnegative integers summing to `sum`.
std::vector<Composition> enumerate_increasing_compositions(int k, int sum);
/// Gamma_{n,k}.  Requires k even and positive, n >= 1.
std::vector<Composition> enumerate_gamma(int n, int k);

void for_each_composition_set(int n, int k,
                              const std::function<void(const CompositionSet&)>& visit);
std::vector<CompositionSet> enumerate_R(int n, int k);

/// |Pi_{n,k}| = n! / ((n/k)! (k!)^{n/k})
Integer partition_count(int n, int k);
/// |T_{n,k}| = n! / (n/k)!
Integer oriented_count(int n, int k);

}  // namespace hyperpf
