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

#include "hyperpf/involution.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hyperpf/error.hpp"

namespace hyperpf {

namespace {

std::vector<int> weights_by_element(const OrientedPartition& rho,
                                    const std::vector<Composition>& weights) {
  std::vector<int> out(static_cast<std::size_t>(rho.n()), 0);
  for (std::size_t i = 0; i < rho.blocks().size(); ++i) {
    const Block& b = rho.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[static_cast<std::size_t>(b[j] - 1)] = weights[i].parts()[j];
    }
  }
  return out;
}

bool default_size_ok(int n, int k) { return k == 2 ? n <= 6 : n <= 8; }

}  // namespace

WeightedOrientedPartition::WeightedOrientedPartition(int n, int k, std::vector<Block> blocks,
                                                     std::vector<Composition> weights)
    : partition_(n, k, blocks) {
  if (weights.size() != blocks.size()) {
    throw InvalidArgument("one weight vector per block is required");
  }
  const int degree = theorem_degree(n, k);
  for (const Composition& w : weights) {
    if (w.size() != k || !w.is_strictly_increasing() || w.sum() != degree) {
      throw InvalidArgument("weight (" + w.to_string() + ") is not in Gamma_{n,k}");
    }
  }
  // Carry each weight vector along with its block into canonical order.
  std::vector<std::pair<Block, Composition>> paired;
  for (std::size_t i = 0; i < blocks.size(); ++i) paired.emplace_back(blocks[i], weights[i]);
  for (const Block& b : partition_.blocks()) {
    const auto it = std::find_if(paired.begin(), paired.end(),
                                 [&](const auto& p) { return p.first == b; });
    weights_.push_back(it->second);
  }
  element_weight_ = weights_by_element(partition_, weights_);
}

WeightedOrientedPartition::WeightedOrientedPartition(Trusted, OrientedPartition partition,
                                                     std::vector<Composition> weights)
    : partition_(std::move(partition)), weights_(std::move(weights)) {
  element_weight_ = weights_by_element(partition_, weights_);
}

int WeightedOrientedPartition::weight_of(int element) const {
  if (element < 1 || element > n()) throw InvalidArgument("element outside [n]");
  return element_weight_[static_cast<std::size_t>(element - 1)];
}

Rational WeightedOrientedPartition::coefficient(const SkewSpec& spec) const {
  Rational c = 1;
  for (const Composition& w : weights_) c *= spec.coefficient(w);
  return c;
}

Monomial WeightedOrientedPartition::monomial() const {
  Monomial m;
  for (int e = 1; e <= n(); ++e) {
    m.set_exponent(static_cast<unsigned>(e), static_cast<unsigned>(weight_of(e)));
  }
  return m;
}

std::string WeightedOrientedPartition::describe_monomial() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i != 0) out += " * ";
    const Block& b = partition_.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j != 0) out += ' ';
      out += 'x' + std::to_string(b[j]) + '^' + std::to_string(weights_[i].parts()[j]);
    }
  }
  return out;
}

std::string WeightedOrientedPartition::describe_coefficient() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i != 0) out += ' ';
    out += "a_{" + weights_[i].to_string() + '}';
  }
  return out;
}

Integer weighted_count(int n, int k) {
  const Integer gamma = static_cast<unsigned long>(enumerate_gamma(n, k).size());
  Integer out = oriented_count(n, k);
  for (int i = 0; i < n / k; ++i) out *= gamma;
  return out;
}

void for_each_weighted(int n, int k,
                       const std::function<void(const WeightedOrientedPartition&)>& visit,
                       bool force) {
  check_shape(n, k);
  if (!force && !default_size_ok(n, k)) {
    throw SizeLimitExceeded("W_{" + std::to_string(n) + "," + std::to_string(k) + "} has " +
                            weighted_count(n, k).get_str() +
                            " elements; pass --force to enumerate");
  }
  const std::vector<Composition> gamma = enumerate_gamma(n, k);
  const std::size_t blocks = static_cast<std::size_t>(n / k);
  for_each_oriented(n, k, [&](const OrientedPartition& rho) {
    std::vector<std::size_t> digits(blocks, 0);
    std::vector<Composition> weights(blocks, gamma.front());
    while (true) {
      for (std::size_t i = 0; i < blocks; ++i) weights[i] = gamma[digits[i]];
      visit(WeightedOrientedPartition(WeightedOrientedPartition::Trusted{}, rho, weights));
      std::size_t pos = blocks;
      while (pos > 0 && ++digits[pos - 1] == gamma.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  });
}

std::vector<WeightedOrientedPartition> enumerate_W(int n, int k, bool force) {
  std::vector<WeightedOrientedPartition> out;
  for_each_weighted(
      n, k, [&](const WeightedOrientedPartition& w) { out.push_back(w); }, force);
  return out;
}

WeightClass classify(const WeightedOrientedPartition& w) {
  std::vector<int> weights;
  for (int e = 1; e <= w.n(); ++e) weights.push_back(w.weight_of(e));
  std::sort(weights.begin(), weights.end());
  return std::adjacent_find(weights.begin(), weights.end()) == weights.end()
             ? WeightClass::distinct
             : WeightClass::repeated;
}

WeightedOrientedPartition phi(const WeightedOrientedPartition& w) {
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j) {
      if (w.weight_of(i) != w.weight_of(j)) continue;
      std::vector<Block> blocks = w.partition().blocks();
      for (Block& b : blocks) {
        for (int& e : b) {
          if (e == i) {
            e = j;
          } else if (e == j) {
            e = i;
          }
        }
      }
      return WeightedOrientedPartition(w.n(), w.k(), std::move(blocks), w.weights());
    }
  }
  throw InvalidArgument("phi is only defined on weighted partitions with a repeated weight");
}

DistinctDecomposition decompose_distinct(const WeightedOrientedPartition& w) {
  if (classify(w) != WeightClass::distinct) {
    throw InvalidArgument("decompose_distinct needs pairwise distinct weights");
  }
  std::vector<int> images;
  for (int e = 1; e <= w.n(); ++e) images.push_back(w.weight_of(e) + 1);
  return {Permutation(std::move(images)), CompositionSet(w.n(), w.k(), w.weights())};
}

WeightedOrientedPartition assemble_distinct(const Permutation& sigma, const CompositionSet& beta) {
  if (sigma.size() != beta.n()) throw InvalidArgument("sigma and beta disagree on n");
  const Permutation inv = sigma.inverse();
  std::vector<Block> blocks;
  for (const Composition& r : beta.compositions()) {
    Block b;
    for (int part : r.parts()) b.push_back(inv(part + 1));
    blocks.push_back(std::move(b));
  }
  return WeightedOrientedPartition(beta.n(), beta.k(), std::move(blocks), beta.compositions());
}

Polynomial signed_weighted_sum(const SkewSpec& spec, WeightFilter filter, bool force) {
  if (!spec.has_theorem_degree()) {
    throw InvalidArgument("weighted expansion needs degree k/2 * (n - 1)");
  }
  Polynomial out;
  for_each_weighted(
      spec.n(), spec.k(),
      [&](const WeightedOrientedPartition& w) {
        if (filter != WeightFilter::all) {
          const bool repeated = classify(w) == WeightClass::repeated;
          if (repeated != (filter == WeightFilter::repeated)) return;
        }
        const Rational c = w.coefficient(spec);
        if (is_zero(c)) return;
        out.add_term(w.monomial(), w.sign() > 0 ? c : Rational(-c));
      },
      force);
  return out;
}

bool InvolutionReport::ok() const {
  return involutive && fixed_point_free && stays_repeated && sign_reversing &&
         preserves_coefficient && preserves_monomial && sign_factorization && bijective &&
         repeated_sum_vanishes && Integer(static_cast<unsigned long>(distinct)) == expected_distinct &&
         repeated + distinct == total;
}

InvolutionReport check_involution(int n, int k, bool force) {
  InvolutionReport report;
  report.expected_distinct =
      factorial(static_cast<unsigned>(n)) * static_cast<unsigned long>(enumerate_R(n, k).size());
  std::map<std::pair<std::vector<Composition>, std::vector<unsigned>>, long> classes;
  auto sorted_weights = [](const WeightedOrientedPartition& w) {
    std::vector<Composition> ws = w.weights();
    std::sort(ws.begin(), ws.end());
    return ws;
  };
  auto exponents = [](const WeightedOrientedPartition& w) {
    std::vector<unsigned> out;
    for (int e = 1; e <= w.n(); ++e) out.push_back(static_cast<unsigned>(w.weight_of(e)));
    return out;
  };
  for_each_weighted(
      n, k,
      [&](const WeightedOrientedPartition& w) {
        ++report.total;
        if (classify(w) == WeightClass::distinct) {
          ++report.distinct;
          const DistinctDecomposition d = decompose_distinct(w);
          if (w.sign() != beta_sign(d.beta) * perm_sign(d.sigma)) report.sign_factorization = false;
          if (assemble_distinct(d.sigma, d.beta) != w) report.bijective = false;
          return;
        }
        ++report.repeated;
        const WeightedOrientedPartition image = phi(w);
        if (image == w) report.fixed_point_free = false;
        if (classify(image) != WeightClass::repeated) {
          report.stays_repeated = false;
          return;
        }
        if (phi(image) != w) report.involutive = false;
        if (image.sign() != -w.sign()) report.sign_reversing = false;
        if (sorted_weights(image) != sorted_weights(w)) report.preserves_coefficient = false;
        if (image.monomial() != w.monomial()) report.preserves_monomial = false;
        classes[{sorted_weights(w), exponents(w)}] += w.sign();
      },
      force);
  for (const auto& [key, signed_count] : classes) {
    if (signed_count != 0) report.repeated_sum_vanishes = false;
  }
  return report;
}

}  // namespace hyperpf
