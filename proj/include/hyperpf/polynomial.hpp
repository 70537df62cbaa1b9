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

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperpf/rational.hpp"

namespace hyperpf {

/// x_1^{e_1} ... x_m^{e_m} over 1-based variable indices.
///
/// Storage is a fixed dense exponent array so monomials are trivially
/// copyable and cheap to hash; variables with exponent zero are simply
/// absent from every observable view (terms(), exponent(), rendering).
class Monomial {
 public:
  static constexpr unsigned kMaxVariables = 32;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<unsigned, unsigned>> powers);

  static Monomial variable(unsigned var, unsigned exponent = 1);

  unsigned exponent(unsigned var) const;
  void set_exponent(unsigned var, unsigned exponent);

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  /// Largest variable index with nonzero exponent, 0 for the unit monomial.
  unsigned max_variable() const;

  /// Nonzero (variable, exponent) pairs in increasing variable order.
  std::vector<std::pair<unsigned, unsigned>> powers() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exponents_{};
};

/// Canonical term order: total degree first, then the exponent of the
/// highest-indexed variable where the monomials differ.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Exact sparse multivariate polynomial with rational coefficients.
/// No stored term ever has a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit scalar embedding
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial variable(unsigned var);
  static Polynomial term(const Monomial& m, const Rational& coefficient);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  /// Highest total degree among terms; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;
  unsigned max_variable() const;

  /// Terms in descending canonical order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  void add_term(const Monomial& m, const Rational& coefficient);
  /// *this += scale * a * b, without materializing a * b.
  void add_product(const Polynomial& a, const Polynomial& b, const Rational& scale);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);
  Polynomial& operator/=(const Rational& divisor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  template <std::integral I>
  friend Polynomial operator*(I s, Polynomial a) {
    return a *= Rational(static_cast<long>(s));
  }
  template <std::integral I>
  friend Polynomial operator*(Polynomial a, I s) {
    return a *= Rational(static_cast<long>(s));
  }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  /// Replaces variable v by variable target[v - 1]; variables past the end
  /// of `target` are left alone.  Colliding images merge (x_j := x_i).
  Polynomial rename_variables(std::span<const unsigned> target) const;

  /// values[v - 1] is the value of x_v.
  Rational evaluate(std::span<const Rational> values) const;
  Rational evaluate(const std::map<unsigned, Rational>& point) const;

  /// Canonical rendering, e.g. "x2^2 - 3/2*x1*x3 + 5".
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Running sum of products of polynomials.  Coefficients are held as
/// integers over one shared denominator, so the hot loop never reduces
/// fractions.
class ProductSum {
 public:
  /// *this += multiplier * a * b
  void add_product(const Polynomial& a, const Polynomial& b, long multiplier);
  Polynomial result() const;

 private:
  std::unordered_map<Monomial, Integer, MonomialHash> numerators_;
  Integer denominator_ = 1;
};

/// prod_{1 <= i < j <= n} (x_j - x_i)
Polynomial vandermonde(unsigned n);

/// True when swapping any two of x_1..x_k negates p.
bool is_skew_symmetric(const Polynomial& p, unsigned k);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace hyperpf
