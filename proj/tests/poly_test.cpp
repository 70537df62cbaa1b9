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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hyperpf/error.hpp"
#include "hyperpf/polynomial.hpp"

namespace hyperpf {
namespace {

Polynomial x(unsigned i) { return Polynomial::variable(i); }

// Leibniz expansion of det[x_i^{j-1}], with its own inversion count.
Polynomial vandermonde_determinant(unsigned n) {
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  Polynomial det;
  do {
    int inversions = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
    }
    Monomial m;
    for (unsigned i = 0; i < n; ++i) m.set_exponent(i + 1, sigma[i]);
    det.add_term(m, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

Polynomial random_polynomial(std::mt19937& gen) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  std::uniform_int_distribution<int> terms(0, 4);
  Polynomial p;
  for (int t = terms(gen); t > 0; --t) {
    Monomial m{{1, exp(gen)}, {2, exp(gen)}, {3, exp(gen)}};
    Rational c(coeff(gen), den(gen));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

TEST(RationalTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-0"), Rational(0));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5").get_den(), 1);
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(PolynomialTest, Addition) {
  EXPECT_EQ((x(1) + x(2)) + (-x(2)), x(1));
  const Polynomial p = 3 * x(1) * x(2) - 1;
  EXPECT_EQ(p + Polynomial(), p);
  EXPECT_EQ(2 * x(1) * x(1) + 3 * x(1) * x(1), 5 * x(1) * x(1));
  EXPECT_EQ((x(1) - x(1)).size(), 0u);
}

TEST(PolynomialTest, Multiplication) {
  EXPECT_EQ((x(2) - x(1)) * (x(2) + x(1)), x(2) * x(2) - x(1) * x(1));
  const Polynomial p = Rational(1, 2) * x(3) - 4;
  EXPECT_EQ(p * Polynomial(1), p);
  EXPECT_TRUE((p * Polynomial()).is_zero());
  EXPECT_EQ((x(2) - x(1)) * (x(3) - x(1)) * (x(3) - x(2)), vandermonde_determinant(3));
}

TEST(PolynomialTest, VandermondeSmallCases) {
  EXPECT_EQ(vandermonde(1), Polynomial(1));
  EXPECT_EQ(vandermonde(2), x(2) - x(1));
  const Polynomial v3 = vandermonde(3);
  EXPECT_EQ(v3.size(), 6u);
  for (const auto& [m, c] : v3.terms()) EXPECT_TRUE(c == 1 || c == -1);
  EXPECT_EQ(v3.coefficient(Monomial{{2, 1}, {3, 2}}), 1);
  EXPECT_THROW(vandermonde(0), InvalidArgument);
}

TEST(PolynomialTest, VandermondeMatchesLeibnizDeterminant) {
  unsigned factorial = 1;
  for (unsigned n = 1; n <= 6; ++n) {
    factorial *= n;
    const Polynomial v = vandermonde(n);
    EXPECT_EQ(v, vandermonde_determinant(n)) << "n=" << n;
    EXPECT_EQ(v.size(), factorial);
    EXPECT_TRUE(v.is_homogeneous());
    EXPECT_EQ(v.degree(), n * (n - 1) / 2);
  }
}

TEST(PolynomialTest, VandermondeVanishesOnRepeatedCoordinates) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> value(-20, 20);
  for (unsigned n = 2; n <= 6; ++n) {
    const Polynomial v = vandermonde(n);
    std::uniform_int_distribution<unsigned> index(0, n - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> point;
      for (unsigned i = 0; i < n; ++i) point.emplace_back(value(gen));
      const unsigned i = index(gen);
      unsigned j = index(gen);
      if (j == i) j = (i + 1) % n;
      point[j] = point[i];
      EXPECT_EQ(v.evaluate(point), 0);
    }
  }
}

TEST(PolynomialTest, Evaluation) {
  const std::vector<Rational> point{1, 2, 3};
  EXPECT_EQ(vandermonde(3).evaluate(point), 2);
  const Polynomial p = 7 - 3 * x(1) * x(4);
  EXPECT_EQ(p.evaluate(std::vector<Rational>(4, 0)), 7);
  std::map<unsigned, Rational> at{{1, Rational(1, 2)}, {2, 4}};
  EXPECT_EQ((x(1) * x(2)).evaluate(at), 2);
  EXPECT_THROW((x(1) * x(3)).evaluate(at), UnassignedVariable);
  EXPECT_THROW(p.evaluate(std::vector<Rational>{1, 2}), UnassignedVariable);
}

TEST(PolynomialTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_polynomial(gen);
    const Polynomial b = random_polynomial(gen);
    const Polynomial c = random_polynomial(gen);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto& [m, coeff] : (a * b + c).terms()) EXPECT_NE(coeff, 0);
  }
}

TEST(PolynomialTest, CanonicalRendering) {
  EXPECT_EQ((x(2) - x(1)).to_string(), "x2 - x1");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial(Rational(-5, 3)).to_string(), "-5/3");
  EXPECT_EQ((x(1) - 3 * x(1) * x(1) * x(2) + 2).to_string(), "-3*x1^2*x2 + x1 + 2");
  EXPECT_EQ(vandermonde(3).to_string(),
            "x2*x3^2 - x1*x3^2 - x2^2*x3 + x1^2*x3 + x1*x2^2 - x1^2*x2");
}

TEST(PolynomialTest, ParseRoundTrip) {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_polynomial(gen);
    EXPECT_EQ(Polynomial::parse(p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(Polynomial::parse("x1 + x1"), 2 * x(1));
  EXPECT_EQ(Polynomial::parse("3/2 * x2^3"), Rational(3, 2) * x(2) * x(2) * x(2));
  EXPECT_THROW(Polynomial::parse("x1 +"), ParseError);
  EXPECT_THROW(Polynomial::parse("y1"), ParseError);
  EXPECT_THROW(Polynomial::parse(""), ParseError);
}

TEST(PolynomialTest, RenameVariables) {
  const Polynomial f = x(2) - x(1);
  const std::vector<unsigned> to37{3, 7};
  EXPECT_EQ(f.rename_variables(to37), x(7) - x(3));
  const std::vector<unsigned> collapse{1, 1};
  EXPECT_TRUE(f.rename_variables(collapse).is_zero());
}

TEST(PolynomialTest, SkewSymmetryTest) {
  EXPECT_TRUE(is_skew_symmetric(x(2) - x(1), 2));
  EXPECT_TRUE(is_skew_symmetric(vandermonde(4), 4));
  EXPECT_FALSE(is_skew_symmetric(x(1) * x(2), 2));
  EXPECT_FALSE(is_skew_symmetric(vandermonde(3) + x(1), 3));
}

// Checked by evaluation, which never multiplies polynomials.
TEST(ProductSumTest, MatchesPointwiseSums) {
  std::mt19937 gen(77);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<int> value(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    ProductSum sum;
    std::vector<std::pair<Polynomial, Polynomial>> factors;
    std::vector<int> multipliers;
    for (int i = 0; i < 4; ++i) {
      factors.emplace_back(random_polynomial(gen), random_polynomial(gen));
      multipliers.push_back(mult(gen));
      sum.add_product(factors.back().first, factors.back().second, multipliers.back());
    }
    const Polynomial result = sum.result();
    for (const auto& [m, c] : result.terms()) EXPECT_NE(c, 0);
    for (int q = 0; q < 5; ++q) {
      std::vector<Rational> point{Rational(value(gen)), Rational(value(gen), 2),
                                  Rational(value(gen))};
      point[1].canonicalize();
      Rational expected = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        expected += multipliers[i] * factors[i].first.evaluate(point) *
                    factors[i].second.evaluate(point);
      }
      EXPECT_EQ(result.evaluate(point), expected);
    }
  }
  EXPECT_TRUE(ProductSum().result().is_zero());
}

TEST(MonomialTest, ExponentLimits) {
  EXPECT_THROW(Monomial::variable(0), InvalidArgument);
  EXPECT_THROW(Monomial::variable(Monomial::kMaxVariables + 1), InvalidArgument);
  const Monomial big = Monomial::variable(1, Monomial::kMaxExponent);
  EXPECT_THROW(big * Monomial::variable(1), InvalidArgument);
  const Monomial high = Monomial::variable(Monomial::kMaxVariables, 200);
  EXPECT_THROW(high * Monomial::variable(Monomial::kMaxVariables, 56), InvalidArgument);
  const Monomial ok = high * Monomial::variable(Monomial::kMaxVariables, 55);
  EXPECT_EQ(ok.exponent(Monomial::kMaxVariables), 255u);
  const Monomial mixed = Monomial{{3, 128}, {9, 127}} * Monomial{{3, 127}, {9, 128}, {20, 1}};
  EXPECT_EQ(mixed.exponent(3), 255u);
  EXPECT_EQ(mixed.exponent(9), 255u);
  EXPECT_EQ(mixed.exponent(20), 1u);
}

}  // namespace
}  // namespace hyperpf
