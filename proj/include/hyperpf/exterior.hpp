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
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "hyperpf/combinat.hpp"
#include "hyperpf/error.hpp"
#include "hyperpf/ring.hpp"

namespace hyperpf {

/// Sign of t_S ^ t_T relative to t_{S u T} for disjoint S, T:
/// (-1)^{#{(s, t) in S x T : s > t}}.
inline int crossing_sign(Subset s, Subset t) {
  unsigned parity = 0;
  while (t != 0) {
    const int bit = std::countr_zero(t);
    parity += static_cast<unsigned>(std::popcount(s >> bit >> 1));
    t &= t - 1;
  }
  return (parity & 1u) ? -1 : 1;
}

/// Element of the exterior algebra on t_1, ..., t_n with coefficients in C
/// (Rational or Polynomial).  Zero coefficients are never stored.
template <class C>
class ExteriorElement {
 public:
  using Table = std::map<Subset, C>;

  explicit ExteriorElement(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder) throw InvalidArgument("generator count out of range");
  }

  /// The scalar 1 on the empty subset.
  static ExteriorElement one(int n) {
    ExteriorElement e(n);
    e.add(0, C(1));
    return e;
  }

  int n() const { return n_; }
  const Table& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }
  Subset full() const { return n_ == 32 ? ~Subset{0} : (Subset{1} << n_) - 1; }

  void add(Subset s, const C& c) {
    if (s & ~full()) throw InvalidArgument("subset is not contained in [n]");
    if (hyperpf::is_zero(c)) return;
    auto [it, inserted] = table_.try_emplace(s, c);
    if (inserted) return;
    it->second += c;
    if (hyperpf::is_zero(it->second)) table_.erase(it);
  }

  C coefficient(Subset s) const {
    const auto it = table_.find(s);
    return it == table_.end() ? C(0) : it->second;
  }

  bool operator==(const ExteriorElement&) const = default;

 private:
  template <class D>
  friend ExteriorElement<D> wedge(const ExteriorElement<D>&, const ExteriorElement<D>&);
  template <class D>
  friend ExteriorElement<D> wedge_square(const ExteriorElement<D>&);

  int n_;
  Table table_;
};

template <class C>
ExteriorElement<C> wedge(const ExteriorElement<C>& a, const ExteriorElement<C>& b) {
  if (a.n() != b.n()) {
    throw InvalidArgument("wedge of elements over " + std::to_string(a.n()) + " and " +
                          std::to_string(b.n()) + " generators");
  }
  std::unordered_map<Subset, Accumulator<C>> acc;
  for (const auto& [s, cs] : a.table()) {
    for (const auto& [t, ct] : b.table()) {
      if (s & t) continue;
      accumulate_product(acc[s | t], cs, ct, crossing_sign(s, t));
    }
  }
  ExteriorElement<C> out(a.n());
  for (const auto& [u, sum] : acc) {
    C c = finish(sum);
    if (!hyperpf::is_zero(c)) out.table_.emplace(u, std::move(c));
  }
  return out;
}

/// a ^ a.  When every stored subset has even size the terms commute, so each
/// unordered pair {S, T} is visited once with multiplier 2.
template <class D>
ExteriorElement<D> wedge_square(const ExteriorElement<D>& a) {
  const auto& table = a.table();
  const bool even = std::all_of(table.begin(), table.end(),
                                [](const auto& e) { return std::popcount(e.first) % 2 == 0; });
  if (!even) return wedge(a, a);
  std::unordered_map<Subset, Accumulator<D>> acc;
  for (auto i = table.begin(); i != table.end(); ++i) {
    if (i->first == 0) accumulate_product(acc[0], i->second, i->second, 1);
    for (auto j = std::next(i); j != table.end(); ++j) {
      if (i->first & j->first) continue;
      accumulate_product(acc[i->first | j->first], i->second, j->second,
                         2 * crossing_sign(i->first, j->first));
    }
  }
  ExteriorElement<D> out(a.n());
  for (const auto& [u, sum] : acc) {
    D c = finish(sum);
    if (!hyperpf::is_zero(c)) out.table_.emplace(u, std::move(c));
  }
  return out;
}

/// a ^ a ^ ... ^ a by a left fold; reference path for wedge_power.
template <class C>
ExteriorElement<C> wedge_power_left_fold(const ExteriorElement<C>& a, unsigned m) {
  ExteriorElement<C> out = ExteriorElement<C>::one(a.n());
  for (unsigned i = 0; i < m; ++i) out = wedge(out, a);
  return out;
}

/// a^m by repeated squaring; m = 0 gives the scalar 1.
template <class C>
ExteriorElement<C> wedge_power(const ExteriorElement<C>& a, unsigned m) {
  if (m == 0) return ExteriorElement<C>::one(a.n());
  if (m <= 2) return m == 1 ? a : wedge_square(a);
  std::optional<ExteriorElement<C>> result;
  ExteriorElement<C> base = a;
  while (true) {
    if (m & 1u) result = result ? wedge(*result, base) : base;
    m >>= 1;
    if (m == 0) break;
    base = wedge_square(base);
  }
  return *result;
}

/// Coefficient of t_{[n]}.
template <class C>
C top_coefficient(const ExteriorElement<C>& a) {
  return a.coefficient(a.full());
}

}  // namespace hyperpf
