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

#include "hyperpf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperpf/error.hpp"

namespace hyperpf {

namespace {

void check_variable(unsigned var) {
  if (var == 0 || var > Monomial::kMaxVariables) {
    throw InvalidArgument("variable index " + std::to_string(var) + " outside [1, " +
                          std::to_string(Monomial::kMaxVariables) + "]");
  }
}

void check_exponent(unsigned e) {
  if (e > Monomial::kMaxExponent) {
    throw InvalidArgument("exponent " + std::to_string(e) + " exceeds " +
                          std::to_string(Monomial::kMaxExponent));
  }
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::pair<unsigned, unsigned>> powers) {
  for (const auto& [var, e] : powers) set_exponent(var, exponent(var) + e);
}

Monomial Monomial::variable(unsigned var, unsigned exponent) {
  Monomial m;
  m.set_exponent(var, exponent);
  return m;
}

unsigned Monomial::exponent(unsigned var) const {
  if (var == 0 || var > kMaxVariables) return 0;
  return exponents_[var - 1];
}

void Monomial::set_exponent(unsigned var, unsigned exponent) {
  check_variable(var);
  check_exponent(exponent);
  exponents_[var - 1] = static_cast<std::uint8_t>(exponent);
}

unsigned Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

unsigned Monomial::max_variable() const {
  for (unsigned v = kMaxVariables; v > 0; --v) {
    if (exponents_[v - 1] != 0) return v;
  }
  return 0;
}

std::vector<std::pair<unsigned, unsigned>> Monomial::powers() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned v = 1; v <= kMaxVariables; ++v) {
    if (exponents_[v - 1] != 0) out.emplace_back(v, exponents_[v - 1]);
  }
  return out;
}

// Bytewise addition eight exponents at a time; a carry out of any byte is
// an exponent overflow.
Monomial Monomial::operator*(const Monomial& other) const {
  constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  Monomial out;
  std::uint64_t carry = 0;
  for (std::size_t off = 0; off < sizeof(exponents_); off += sizeof(std::uint64_t)) {
    std::uint64_t a;
    std::uint64_t b;
    std::memcpy(&a, exponents_.data() + off, sizeof(a));
    std::memcpy(&b, other.exponents_.data() + off, sizeof(b));
    const std::uint64_t sum = ((a & ~kHigh) + (b & ~kHigh)) ^ ((a ^ b) & kHigh);
    carry |= ((a & b) | ((a | b) & ~sum)) & kHigh;
    std::memcpy(out.exponents_.data() + off, &sum, sizeof(sum));
  }
  if (carry != 0) check_exponent(kMaxExponent + 1);
  return out;
}

std::size_t Monomial::hash() const {
  static_assert(sizeof(exponents_) % sizeof(std::uint64_t) == 0);
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t off = 0; off < sizeof(exponents_); off += sizeof(std::uint64_t)) {
    std::uint64_t word;
    std::memcpy(&word, exponents_.data() + off, sizeof(word));
    h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [var, e] : powers()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(var);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  for (unsigned v = Monomial::kMaxVariables; v > 0; --v) {
    const unsigned ea = a.exponent(v);
    const unsigned eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!hyperpf::is_zero(constant)) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(unsigned var) { return term(Monomial::variable(var), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

unsigned Polynomial::max_variable() const {
  unsigned v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.max_variable());
  return v;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
  Rational c = coefficient;
  c.canonicalize();
  if (hyperpf::is_zero(c)) return;
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (hyperpf::is_zero(it->second)) terms_.erase(it);
}

namespace {

// Terms scaled to integers by the lcm of their denominators.
struct IntegralTerms {
  std::vector<std::pair<Monomial, Integer>> terms;
  Integer denominator = 1;
};

IntegralTerms integral_terms(const Polynomial::TermMap& map) {
  IntegralTerms out;
  for (const auto& [m, c] : map) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  out.terms.reserve(map.size());
  for (const auto& [m, c] : map) out.terms.emplace_back(m, c.get_num() * (out.denominator / c.get_den()));
  return out;
}

bool has_integral_terms(const Polynomial::TermMap& map) {
  return std::all_of(map.begin(), map.end(),
                     [](const auto& t) { return mpz_cmp_ui(t.second.get_den_mpz_t(), 1) == 0; });
}

// out += scale * a * b with every coefficient integral.  Entries of out that
// are already integers are updated in place on the numerator.
void add_integral_product(Polynomial::TermMap& out, const Polynomial::TermMap& a,
                          const Polynomial::TermMap& b, const Integer& scale) {
  std::vector<std::pair<Monomial, Integer>> left;
  left.reserve(a.size());
  for (const auto& [m, c] : a) left.emplace_back(m, c.get_num() * scale);
  out.reserve(out.size() + std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  Integer product;
  for (const auto& [ma, na] : left) {
    for (const auto& [mb, cb] : b) {
      auto [it, inserted] = out.try_emplace(ma * mb);
      mpq_ptr slot = it->second.get_mpq_t();
      if (mpz_cmp_ui(mpq_denref(slot), 1) == 0) {
        mpz_addmul(mpq_numref(slot), na.get_mpz_t(), mpq_numref(cb.get_mpq_t()));
      } else {
        mpz_mul(product.get_mpz_t(), na.get_mpz_t(), mpq_numref(cb.get_mpq_t()));
        it->second += Rational(product);
      }
    }
  }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
}

}  // namespace

void Polynomial::add_product(const Polynomial& a, const Polynomial& b, const Rational& scale) {
  if (hyperpf::is_zero(scale) || a.is_zero() || b.is_zero()) return;
  if (is_integral(scale) && has_integral_terms(a.terms_) && has_integral_terms(b.terms_)) {
    add_integral_product(terms_, a.terms_, b.terms_, scale.get_num());
    return;
  }
  const IntegralTerms ia = integral_terms(a.terms_);
  const IntegralTerms ib = integral_terms(b.terms_);
  std::unordered_map<Monomial, Integer, MonomialHash> sum;
  sum.reserve(std::min<std::size_t>(ia.terms.size() * ib.terms.size(), 1u << 20));
  for (const auto& [ma, na] : ia.terms) {
    for (const auto& [mb, nb] : ib.terms) {
      Integer& slot = sum[ma * mb];
      mpz_addmul(slot.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    }
  }
  Rational factor = scale / Rational(ia.denominator * ib.denominator);
  factor.canonicalize();
  for (auto& [m, n] : sum) {
    if (sgn(n) == 0) continue;
    Rational c = Rational(n) * factor;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (hyperpf::is_zero(it->second)) terms_.erase(it);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (hyperpf::is_zero(scale)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& divisor) {
  if (hyperpf::is_zero(divisor)) throw InvalidArgument("polynomial division by zero");
  for (auto& [m, c] : terms_) c /= divisor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.add_product(a, b, 1);
  return out;
}

void ProductSum::add_product(const Polynomial& a, const Polynomial& b, long multiplier) {
  if (multiplier == 0 || a.is_zero() || b.is_zero()) return;
  const IntegralTerms ia = integral_terms(a.terms());
  const IntegralTerms ib = integral_terms(b.terms());
  const Integer d = ia.denominator * ib.denominator;
  Integer common;
  mpz_lcm(common.get_mpz_t(), denominator_.get_mpz_t(), d.get_mpz_t());
  if (common != denominator_) {
    const Integer lift = common / denominator_;
    for (auto& [m, c] : numerators_) c *= lift;
    denominator_ = common;
  }
  const Integer scale = Integer(multiplier) * (denominator_ / d);
  numerators_.reserve(numerators_.size() + std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  Integer left;
  for (const auto& [ma, na] : ia.terms) {
    left = na * scale;
    for (const auto& [mb, nb] : ib.terms) {
      Integer& slot = numerators_[ma * mb];
      mpz_addmul(slot.get_mpz_t(), left.get_mpz_t(), nb.get_mpz_t());
    }
  }
}

Polynomial ProductSum::result() const {
  Polynomial out;
  for (const auto& [m, c] : numerators_) {
    if (sgn(c) != 0) out.add_term(m, Rational(c, denominator_));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::rename_variables(std::span<const unsigned> target) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [var, e] : m.powers()) {
      const unsigned to = var <= target.size() ? target[var - 1] : var;
      check_variable(to);
      renamed.set_exponent(to, renamed.exponent(to) + e);
    }
    out.add_term(renamed, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  Rational power;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [var, e] : m.powers()) {
      if (var > values.size()) {
        throw UnassignedVariable("no value assigned to x" + std::to_string(var));
      }
      mpz_pow_ui(mpq_numref(power.get_mpq_t()), values[var - 1].get_num_mpz_t(), e);
      mpz_pow_ui(mpq_denref(power.get_mpq_t()), values[var - 1].get_den_mpz_t(), e);
      value *= power;
    }
    total += value;
  }
  return total;
}

Rational Polynomial::evaluate(const std::map<unsigned, Rational>& point) const {
  std::vector<Rational> values(max_variable());
  std::vector<bool> assigned(values.size(), false);
  for (const auto& [var, value] : point) {
    if (var >= 1 && var <= values.size()) {
      values[var - 1] = value;
      assigned[var - 1] = true;
    }
  }
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, e] : m.powers()) {
      if (!assigned[var - 1]) {
        throw UnassignedVariable("no value assigned to x" + std::to_string(var));
      }
    }
  }
  return evaluate(values);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += hyperpf::to_string(magnitude);
    } else {
      if (magnitude != 1) out += hyperpf::to_string(magnitude) + '*';
      out += m.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      out.add_term(m, negative ? Rational(-c) : c);
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coefficient = 1;
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string literal = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        literal += '/' + digits();
      }
      coefficient = parse_rational(literal);
      skip_space();
      if (at_end() || peek() != '*') return {m, coefficient};
      ++pos_;
      skip_space();
    }
    while (true) {
      if (at_end() || peek() != 'x') fail("expected variable");
      ++pos_;
      const unsigned var = number();
      unsigned e = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = number();
      }
      if (var == 0 || var > Monomial::kMaxVariables) fail("variable index out of range");
      m.set_exponent(var, m.exponent(var) + e);
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
    }
    return {m, coefficient};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    const std::string d = digits();
    if (d.size() > 6) fail("number too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolynomialParser(text).parse(); }

Polynomial vandermonde(unsigned n) {
  if (n == 0) throw InvalidArgument("vandermonde requires n >= 1");
  Polynomial out = 1;
  for (unsigned j = 2; j <= n; ++j) {
    for (unsigned i = 1; i < j; ++i) {
      out *= Polynomial::variable(j) - Polynomial::variable(i);
    }
  }
  return out;
}

bool is_skew_symmetric(const Polynomial& p, unsigned k) {
  if (k < 2) return true;
  std::vector<unsigned> swap(k);
  for (unsigned i = 1; i < k; ++i) {
    std::iota(swap.begin(), swap.end(), 1u);
    std::swap(swap[i - 1], swap[i]);
    if (p.rename_variables(swap) != -p) return false;
  }
  return true;
}

}  // namespace hyperpf
