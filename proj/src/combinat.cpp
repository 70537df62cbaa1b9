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

#include "hyperpf/combinat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hyperpf/error.hpp"

namespace hyperpf {

Subset subset_of(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxOrder) {
      throw InvalidArgument("subset element " + std::to_string(e) + " out of range");
    }
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

int sequence_sign(std::span<const int> values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Subset> k_subsets(int n, int k) {
  if (n < 0 || n > kMaxOrder || k < 0) throw InvalidArgument("k_subsets: bad arguments");
  std::vector<Subset> out;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(subset_of(chosen));
      return;
    }
    for (int e = next; e + (k - static_cast<int>(chosen.size())) - 1 <= n; ++e) {
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_zero_based(std::span<const int> images) {
  std::vector<int> shifted(images.begin(), images.end());
  for (int& v : shifted) ++v;
  return Permutation(std::move(shifted));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

int perm_sign(const Permutation& p) { return sequence_sign(p.images()); }

void check_shape(int n, int k) {
  if (k <= 0 || k % 2 != 0) {
    throw InvalidArgument("k must be a positive even integer (got " + std::to_string(k) + ")");
  }
  if (n <= 0 || n % k != 0) {
    throw InvalidArgument("n must be a positive multiple of k (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
  if (n > kMaxOrder) {
    throw InvalidArgument("n=" + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxOrder));
  }
}

int theorem_degree(int n, int k) { return k / 2 * (n - 1); }

namespace {

/// Validates disjoint cover of [n] by n/k blocks of size k.
void check_blocks(int n, int k, const std::vector<Block>& blocks) {
  check_shape(n, k);
  if (static_cast<int>(blocks.size()) != n / k) {
    throw InvalidArgument("expected " + std::to_string(n / k) + " blocks");
  }
  Subset seen = 0;
  for (const Block& b : blocks) {
    if (static_cast<int>(b.size()) != k) {
      throw InvalidArgument("block of size " + std::to_string(b.size()) + ", expected " +
                            std::to_string(k));
    }
    for (int e : b) {
      if (e < 1 || e > n) throw InvalidArgument("block element out of [n]");
      const Subset bit = Subset{1} << (e - 1);
      if (seen & bit) throw InvalidArgument("blocks are not disjoint");
      seen |= bit;
    }
  }
}

void order_by_minimum(std::vector<Block>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
}

std::vector<int> concatenate(const std::vector<Block>& blocks) {
  std::vector<int> out;
  for (const Block& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Lexicographic k-subsets of `pool` (sorted) that contain pool[0].
template <class Fn>
void for_each_block_with_first(const std::vector<int>& pool, int k, Fn&& fn) {
  Block block{pool.front()};
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(block.size()) == k) {
      fn(block);
      return;
    }
    const std::size_t need = static_cast<std::size_t>(k) - block.size();
    for (std::size_t i = start; i + need <= pool.size(); ++i) {
      block.push_back(pool[i]);
      rec(i + 1);
      block.pop_back();
    }
  };
  rec(1);
}

std::vector<int> unused_elements(int n, Subset used) {
  std::vector<int> out;
  for (int e = 1; e <= n; ++e) {
    if (!(used & (Subset{1} << (e - 1)))) out.push_back(e);
  }
  return out;
}

}  // namespace

EqualBlockPartition::EqualBlockPartition(int n, int k, std::vector<Block> blocks)
    : n_(n), k_(k), blocks_(std::move(blocks)) {
  check_blocks(n_, k_, blocks_);
  for (Block& b : blocks_) std::sort(b.begin(), b.end());
  order_by_minimum(blocks_);
}

std::vector<int> EqualBlockPartition::concatenation() const { return concatenate(blocks_); }

std::vector<Subset> EqualBlockPartition::subsets() const {
  std::vector<Subset> out;
  out.reserve(blocks_.size());
  for (const Block& b : blocks_) out.push_back(subset_of(b));
  return out;
}

int partition_sign(const EqualBlockPartition& tau) { return sequence_sign(tau.concatenation()); }

OrientedPartition::OrientedPartition(int n, int k, std::vector<Block> blocks)
    : n_(n), k_(k), blocks_(std::move(blocks)) {
  check_blocks(n_, k_, blocks_);
  order_by_minimum(blocks_);
}

std::vector<int> OrientedPartition::concatenation() const { return concatenate(blocks_); }

EqualBlockPartition OrientedPartition::underlying() const {
  return EqualBlockPartition(n_, k_, blocks_);
}

int oriented_sign(const OrientedPartition& rho) { return sequence_sign(rho.concatenation()); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw InvalidArgument("composition parts must be nonnegative");
  }
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_strictly_increasing() const {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::greater_equal<>()) ==
         parts_.end();
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

CompositionSet::CompositionSet(int n, int k, std::vector<Composition> compositions)
    : n_(n), k_(k), compositions_(std::move(compositions)) {
  check_shape(n_, k_);
  if (static_cast<int>(compositions_.size()) != n_ / k_) {
    throw InvalidArgument("composition set needs " + std::to_string(n_ / k_) + " members");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (const Composition& c : compositions_) {
    if (c.size() != k_ || !c.is_strictly_increasing() || c.sum() != theorem_degree(n_, k_)) {
      throw InvalidArgument("(" + c.to_string() + ") is not in Gamma_{n,k}");
    }
    for (int part : c.parts()) {
      if (part >= n_ || seen[static_cast<std::size_t>(part)]) {
        throw InvalidArgument("parts of a composition set must be exactly 0..n-1");
      }
      seen[static_cast<std::size_t>(part)] = true;
    }
  }
  std::sort(compositions_.begin(), compositions_.end(),
            [](const Composition& a, const Composition& b) { return a[0] < b[0]; });
}

std::vector<int> CompositionSet::concatenation() const {
  std::vector<int> out;
  for (const Composition& c : compositions_) {
    out.insert(out.end(), c.parts().begin(), c.parts().end());
  }
  return out;
}

int beta_sign(const CompositionSet& beta) { return sequence_sign(beta.concatenation()); }

void for_each_partition(int n, int k,
                        const std::function<void(const EqualBlockPartition&)>& visit) {
  check_shape(n, k);
  std::vector<Block> blocks;
  std::function<void(Subset)> rec = [&](Subset used) {
    const std::vector<int> pool = unused_elements(n, used);
    if (pool.empty()) {
      visit(EqualBlockPartition(EqualBlockPartition::Trusted{}, n, k, blocks));
      return;
    }
    for_each_block_with_first(pool, k, [&](const Block& b) {
      blocks.push_back(b);
      rec(used | subset_of(b));
      blocks.pop_back();
    });
  };
  rec(0);
}

std::vector<EqualBlockPartition> enumerate_partitions(int n, int k) {
  std::vector<EqualBlockPartition> out;
  for_each_partition(n, k, [&](const EqualBlockPartition& t) { out.push_back(t); });
  return out;
}

void for_each_oriented(int n, int k, const std::function<void(const OrientedPartition&)>& visit) {
  check_shape(n, k);
  std::vector<Block> blocks;
  std::function<void(Subset)> rec = [&](Subset used) {
    const std::vector<int> pool = unused_elements(n, used);
    if (pool.empty()) {
      visit(OrientedPartition(OrientedPartition::Trusted{}, n, k, blocks));
      return;
    }
    std::vector<Block> tuples;
    for_each_block_with_first(pool, k, [&](const Block& b) {
      Block t = b;
      do {
        tuples.push_back(t);
      } while (std::next_permutation(t.begin(), t.end()));
    });
    std::sort(tuples.begin(), tuples.end());
    for (const Block& t : tuples) {
      blocks.push_back(t);
      rec(used | subset_of(t));
      blocks.pop_back();
    }
  };
  rec(0);
}

std::vector<OrientedPartition> enumerate_oriented(int n, int k) {
  std::vector<OrientedPartition> out;
  for_each_oriented(n, k, [&](const OrientedPartition& r) { out.push_back(r); });
  return out;
}

std::vector<Composition> enumerate_increasing_compositions(int k, int sum) {
  if (k <= 0) throw InvalidArgument("composition length must be positive");
  std::vector<Composition> out;
  if (sum < 0) return out;
  std::vector<int> parts;
  // Smallest possible total of `count` distinct parts all >= low.
  auto min_total = [](int low, int count) { return count * low + count * (count - 1) / 2; };
  std::function<void(int, int)> rec = [&](int low, int remaining) {
    const int left = k - static_cast<int>(parts.size());
    if (left == 1) {
      if (remaining >= low) {
        parts.push_back(remaining);
        out.emplace_back(parts);
        parts.pop_back();
      }
      return;
    }
    for (int v = low; min_total(v, left) <= remaining; ++v) {
      parts.push_back(v);
      rec(v + 1, remaining - v);
      parts.pop_back();
    }
  };
  rec(0, sum);
  return out;
}

std::vector<Composition> enumerate_gamma(int n, int k) {
  if (k <= 0 || k % 2 != 0) throw InvalidArgument("k must be a positive even integer");
  if (n < 1) throw InvalidArgument("n must be positive");
  return enumerate_increasing_compositions(k, theorem_degree(n, k));
}

void for_each_composition_set(int n, int k,
                              const std::function<void(const CompositionSet&)>& visit) {
  check_shape(n, k);
  std::vector<Composition> usable;
  for (Composition& c : enumerate_gamma(n, k)) {
    if (c.parts().back() < n) usable.push_back(std::move(c));
  }
  std::vector<Composition> chosen;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t used) {
    if (static_cast<int>(chosen.size()) == n / k) {
      visit(CompositionSet(CompositionSet::Trusted{}, n, k, chosen));
      return;
    }
    const int smallest = std::countr_one(used);
    for (const Composition& c : usable) {
      if (c[0] != smallest) continue;
      std::uint64_t mask = 0;
      for (int part : c.parts()) mask |= std::uint64_t{1} << part;
      if (mask & used) continue;
      chosen.push_back(c);
      rec(used | mask);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::vector<CompositionSet> enumerate_R(int n, int k) {
  std::vector<CompositionSet> out;
  for_each_composition_set(n, k, [&](const CompositionSet& b) { out.push_back(b); });
  return out;
}

Integer partition_count(int n, int k) {
  check_shape(n, k);
  Integer denom = factorial(static_cast<unsigned>(n / k));
  const Integer kf = factorial(static_cast<unsigned>(k));
  for (int i = 0; i < n / k; ++i) denom *= kf;
  return factorial(static_cast<unsigned>(n)) / denom;
}

Integer oriented_count(int n, int k) {
  check_shape(n, k);
  return factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n / k));
}

}  // namespace hyperpf
