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

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "hyperpf/error.hpp"
#include "hyperpf/hyperpfaffian.hpp"

namespace hyperpf {
namespace {

Polynomial x(unsigned i) { return Polynomial::variable(i); }

Polynomial power(const Polynomial& p, int e) {
  Polynomial out = 1;
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

// f(S) = y_i, an independent symbol per subset (i = lexicographic rank + 1).
SkewFunction<Polynomial> symbolic_function(int n, int k) {
  SkewFunction<Polynomial> f(n, k);
  unsigned i = 0;
  for (Subset s : k_subsets(n, k)) f.set(s, x(++i));
  return f;
}

SkewSpec rational_spec(int n, int k, Lcg& rng) {
  SkewSpec spec(n, k);
  for (const Composition& r : enumerate_gamma(n, k)) spec.set(r, rng.small_rational());
  return spec;
}

SkewSpec spec_of(int n, int k, std::initializer_list<std::pair<Composition, Rational>> terms) {
  SkewSpec spec(n, k);
  for (const auto& [r, a] : terms) spec.set(r, a);
  return spec;
}

TEST(SkewSpecTest, Validation) {
  SkewSpec spec(4, 2);
  EXPECT_EQ(spec.degree(), 3);
  EXPECT_THROW(spec.set(Composition({2, 1}), 1), InvalidArgument);
  EXPECT_THROW(spec.set(Composition({0, 2}), 1), InvalidArgument);
  EXPECT_THROW(spec.set(Composition({0, 1, 2}), 1), InvalidArgument);
  spec.set(Composition({0, 3}), 5);
  EXPECT_EQ(spec.coefficient(Composition({0, 3})), 5);
  EXPECT_EQ(spec.coefficient(Composition({1, 2})), 0);
  spec.set(Composition({0, 3}), 0);
  EXPECT_TRUE(spec.terms().empty());
  EXPECT_THROW(SkewSpec(6, 4), InvalidArgument);
}

TEST(SkewExpandTest, Examples) {
  EXPECT_EQ(skew_expand(spec_of(2, 2, {{Composition({0, 1}), 1}})), x(2) - x(1));
  EXPECT_EQ(skew_expand(torelli_spec(4)), power(x(2) - x(1), 3));
  EXPECT_EQ(skew_expand(spec_of(4, 4, {{Composition({0, 1, 2, 3}), 1}})), vandermonde(4));
}

TEST(SkewExpandTest, SkewSymmetricWithFullTermCount) {
  Lcg rng(17);
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {8, 4}, {6, 6}}) {
    const SkewSpec spec = rational_spec(n, k, rng);
    const Polynomial f = skew_expand(spec);
    EXPECT_TRUE(is_skew_symmetric(f, static_cast<unsigned>(k)));
    std::size_t kf = 1;
    for (int i = 2; i <= k; ++i) kf *= static_cast<std::size_t>(i);
    EXPECT_EQ(f.size(), kf * spec.terms().size());
  }
}

TEST(InstantiateTest, Examples) {
  const Polynomial f = x(2) - x(1);
  EXPECT_EQ(instantiate(f, 2, std::vector<int>{3, 7}), x(7) - x(3));
  EXPECT_EQ(instantiate(f, 2, std::vector<int>{1, 2}), f);
  EXPECT_EQ(instantiate(torelli_spec(4), std::vector<int>{2, 4}), power(x(4) - x(2), 3));
  EXPECT_THROW(instantiate(f, 2, std::vector<int>{1, 2, 3}), InvalidArgument);
  EXPECT_THROW(instantiate(f, 2, std::vector<int>{2, 1}), InvalidArgument);
  EXPECT_THROW(instantiate(x(3), 2, std::vector<int>{1, 2}), InvalidArgument);
}

TEST(SkewFunctionTest, ValueExtendsBySign) {
  const SkewFunction<Polynomial> f = symbolic_function(4, 2);
  EXPECT_EQ(f.value(std::vector<int>{2, 1}), -x(1));
  EXPECT_EQ(f.value(std::vector<int>{3, 4}), x(6));
  EXPECT_TRUE(f.value(std::vector<int>{3, 3}).is_zero());
  SkewFunction<Rational> g(4, 2);
  EXPECT_THROW(g.set(subset_of(std::vector<int>{1, 2, 3}), 1), InvalidArgument);
  EXPECT_THROW(g.set(subset_of(std::vector<int>{1, 5}), 1), InvalidArgument);
}

TEST(PfDefinitionTest, SmallCases) {
  EXPECT_EQ(pf_definition(symbolic_function(2, 2)), x(1));
  // subsets 12 13 14 23 24 34 -> y1..y6
  EXPECT_EQ(pf_definition(symbolic_function(4, 2)), x(1) * x(6) - x(2) * x(5) + x(3) * x(4));
  EXPECT_EQ(pf_definition(symbolic_function(4, 4)), x(1));
}

TEST(PfExteriorTest, AgreesWithDefinition) {
  EXPECT_EQ(pf_exterior(symbolic_function(2, 2)), x(1));
  EXPECT_EQ(pf_exterior(symbolic_function(4, 2)), pf_definition(symbolic_function(4, 2)));
  EXPECT_EQ(pf_exterior(symbolic_function(6, 2)), pf_definition(symbolic_function(6, 2)));
  Lcg rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const SkewFunction<Rational> f = random_skew_function(8, 4, rng);
    EXPECT_EQ(pf_exterior(f), pf_definition(f));
  }
}

TEST(TheoremCoefficientTest, Examples) {
  EXPECT_EQ(theorem_coefficient(spec_of(2, 2, {{Composition({0, 1}), 7}})), 7);
  Lcg rng(3);
  for (int n = 2; n <= 12; n += 2) {
    const SkewSpec spec = rational_spec(n, 2, rng);
    Rational product = 1;
    for (int i = 0; i < n / 2; ++i) product *= spec.coefficient(Composition({i, n - 1 - i}));
    EXPECT_EQ(theorem_coefficient(spec), product);
  }
  EXPECT_THROW(theorem_coefficient(SkewSpec(4, 2, 2)), InvalidArgument);
  EXPECT_THROW(pf_closed_form(SkewSpec(4, 2, 1)), InvalidArgument);
}

// Isolating one beta at a time: the coefficient is exactly its sign.
TEST(TheoremCoefficientTest, TwelveByFourTermsAndSigns) {
  int negative = 0;
  const auto sets = enumerate_R(12, 4);
  ASSERT_EQ(sets.size(), 32u);
  for (const CompositionSet& beta : sets) {
    SkewSpec spec(12, 4);
    for (const Composition& r : beta.compositions()) spec.set(r, 1);
    EXPECT_EQ(theorem_coefficient(spec), beta_sign(beta));
    negative += beta_sign(beta) < 0;
  }
  EXPECT_EQ(negative, 6);
  EXPECT_EQ(sets.front().compositions(),
            (std::vector<Composition>{Composition({0, 1, 10, 11}), Composition({2, 3, 8, 9}),
                                      Composition({4, 5, 6, 7})}));
  EXPECT_EQ(beta_sign(sets.front()), 1);
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(pf_closed_form(spec_of(2, 2, {{Composition({0, 1}), 1}})), x(2) - x(1));
  EXPECT_EQ(pf_closed_form(torelli_spec(4)), -3 * vandermonde(4));
  EXPECT_EQ(pf_definition(skew_function(torelli_spec(4))), -3 * vandermonde(4));
  const Rational c(-7, 2);
  const SkewSpec single = spec_of(4, 4, {{Composition({0, 1, 2, 3}), c}});
  EXPECT_EQ(pf_closed_form(single), c * vandermonde(4));
  EXPECT_EQ(pf_definition(skew_function(single)), skew_expand(single));
}

TEST(TorelliTest, Constants) {
  EXPECT_EQ(torelli_constant(2), 1);
  EXPECT_EQ(torelli_constant(4), -3);
  EXPECT_EQ(torelli_constant(6), -50);
  EXPECT_THROW(torelli_constant(5), InvalidArgument);
  EXPECT_THROW(torelli_constant(0), InvalidArgument);
  for (int n = 2; n <= 6; n += 2) {
    const Polynomial pf = pf_definition(skew_function(power(x(2) - x(1), n - 1), n, 2));
    EXPECT_EQ(pf, torelli_constant(n) * vandermonde(static_cast<unsigned>(n))) << "n=" << n;
    EXPECT_EQ(skew_expand(torelli_spec(n)), power(x(2) - x(1), n - 1));
  }
}

TEST(RelabelTest, SignLaw) {
  const SkewFunction<Polynomial> f2 = symbolic_function(2, 2);
  EXPECT_EQ(relabel(f2, Permutation::identity(2)).values(), f2.values());
  EXPECT_EQ(pf_definition(relabel(f2, Permutation({2, 1}))), -x(1));
  EXPECT_THROW(relabel(f2, Permutation::identity(3)), InvalidArgument);

  Lcg rng(23);
  const SkewFunction<Polynomial> f4 = symbolic_function(4, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation sigma = rng.permutation(4);
    EXPECT_EQ(pf_definition(relabel(f4, sigma)), perm_sign(sigma) * pf_definition(f4));
  }
  const SkewFunction<Rational> f6 = random_skew_function(6, 2, rng);
  const Rational pf6 = pf_definition(f6);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation sigma = rng.permutation(6);
    EXPECT_EQ(pf_definition(relabel(f6, sigma)), perm_sign(sigma) * pf6);
  }
}

TEST(AgreementTest, ThreeAlgorithmsSymbolic) {
  Lcg rng(2718);
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {6, 2}, {8, 2},
                                                              {4, 4}, {6, 6}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const SkewSpec spec = rational_spec(n, k, rng);
      const SkewFunction<Polynomial> f = skew_function(spec);
      const Polynomial definition = pf_definition(f);
      EXPECT_EQ(definition, pf_exterior(f)) << n << "," << k;
      EXPECT_EQ(definition, pf_closed_form(spec)) << n << "," << k;
    }
  }
}

TEST(AgreementTest, ThreeAlgorithmsAtPoints) {
  Lcg rng(31);
  const SkewSpec spec = random_spec(12, 4, rng);
  for (int q = 0; q < 2; ++q) {
    std::vector<Rational> point;
    for (int i = 0; i < 12; ++i) point.emplace_back(rng.uniform(-30, 30));
    const SkewFunction<Rational> f = skew_function_at(spec, point);
    const Rational definition = pf_definition(f);
    EXPECT_EQ(definition, pf_exterior(f));
    EXPECT_EQ(definition, pf_closed_form_at(spec, point));
  }
  EXPECT_THROW(skew_function_at(spec, std::vector<Rational>(3, 1)), UnassignedVariable);
}

TEST(VanishingTest, EqualVariables) {
  Lcg rng(41);
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {6, 2}, {4, 4},
                                                              {8, 4}}) {
    const Polynomial pf = pf_definition(skew_function(random_spec(n, k, rng)));
    ASSERT_FALSE(pf.is_zero());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<unsigned> target(static_cast<std::size_t>(n));
        std::iota(target.begin(), target.end(), 1u);
        target[static_cast<std::size_t>(j - 1)] = static_cast<unsigned>(i);
        EXPECT_TRUE(pf.rename_variables(target).is_zero()) << n << "," << k << " x" << j << "=x" << i;
      }
    }
  }
}

TEST(VanishingTest, DegreeDeficient) {
  Lcg rng(43);
  for (int n = 2; n <= 6; n += 2) {
    for (int degree = 1; degree < theorem_degree(n, 2); ++degree) {
      const SkewSpec spec = random_spec(n, 2, degree, rng);
      EXPECT_TRUE(pf_definition(skew_function(spec)).is_zero()) << "n=" << n << " d=" << degree;
    }
  }
}

TEST(KEqualsTwoTest, ProductOfLeadingCoefficients) {
  Lcg rng(47);
  for (int n = 2; n <= 8; n += 2) {
    const SkewSpec spec = rational_spec(n, 2, rng);
    Rational product = 1;
    for (int i = 0; i < n / 2; ++i) product *= spec.coefficient(Composition({i, n - 1 - i}));
    EXPECT_EQ(pf_definition(skew_function(spec)), product * vandermonde(static_cast<unsigned>(n)));
  }
}

}  // namespace
}  // namespace hyperpf
