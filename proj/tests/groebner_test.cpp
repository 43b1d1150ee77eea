/* Copyright 2026 The lyubeznik Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lyubeznik/groebner.hpp"
#include "test_util.hpp"

namespace lyu {
namespace {

using testing::I;
using testing::P;

std::vector<std::string> strings(const GroebnerBasis& g) {
  std::vector<std::string> out;
  for (const auto& e : g.elements()) out.push_back(e.to_string());
  return out;
}

TEST(Buchberger, SymmetricFunctions) {
  auto r = PolyRing::make(32003, {"x", "y", "z"});
  auto ideal = I(r, {"x+y+z", "xy+yz+zx", "xyz"});
  EXPECT_EQ(strings(ideal.groebner_basis()),
            (std::vector<std::string>{"x + y + z", "y^2 + y*z + z^2", "z^3"}));
}

TEST(Buchberger, TwistedCubicIsAlreadyABasis) {
  auto r = PolyRing::make(101, {"x", "y", "z", "w"});
  auto ideal = I(r, {"xz-y^2", "yw-z^2", "xw-yz"});
  const auto& gb = ideal.groebner_basis();
  EXPECT_EQ(gb.size(), 3u);
  EXPECT_TRUE(verify_groebner(gb));
  EXPECT_EQ(krull_dimension(ideal), 2);
  // Hilbert function of the twisted cubic: 3d + 1.
  for (int d = 0; d < 8; ++d) {
    EXPECT_EQ(count_standard_monomials(gb.leading_monomials(), 4, d),
              static_cast<std::uint64_t>(3 * d + 1));
  }
}

TEST(Buchberger, InhomogeneousInputUsesSugar) {
  auto r = PolyRing::make(7, {"x", "y"});
  auto ideal = I(r, {"x^2 - y", "x^3 - x"});
  EXPECT_TRUE(verify_groebner(ideal.groebner_basis()));
  EXPECT_TRUE(ideal.contains(P(r, "x*y - x")));
  EXPECT_TRUE(ideal.contains(P(r, "y^2 - y")));
  EXPECT_FALSE(ideal.contains(P(r, "y - 1")));
  EXPECT_EQ(krull_dimension(ideal), 0);
  EXPECT_TRUE(I(r, {"x - 1", "x"}).is_unit());
}

TEST(Buchberger, LexOrder) {
  auto r = PolyRing::make(101, {"x", "y"}, MonomialOrder::lex);
  auto ideal = I(r, {"x^2 + y^2 - 1", "x - y"});
  // Lex basis contains an element in y alone.
  bool found = false;
  for (const auto& g : ideal.groebner_basis().elements()) {
    found |= g.leading_term().mono[0] == 0;
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(verify_groebner(ideal.groebner_basis()));
}

TEST(Buchberger, BudgetIsEnforced) {
  auto r = PolyRing::make(32003, PolyRing::indexed_names("x", 6));
  std::mt19937 rng(5);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(testing::random_homogeneous(r, rng, 3, 6));
  const auto saved = pair_budget().load();
  pair_budget() = 3;
  EXPECT_THROW(buchberger(r, gens), BudgetExceeded);
  pair_budget() = saved;
}

class RandomIdeals : public ::testing::TestWithParam<int> {};

TEST_P(RandomIdeals, ReducedBasisProperties) {
  std::mt19937 rng(GetParam());
  const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 101}[GetParam() % 4];
  auto r = PolyRing::make(p, PolyRing::indexed_names("x", 4));
  std::vector<Polynomial> gens;
  std::uniform_int_distribution<int> deg(1, 3);
  for (int i = 0; i < 3; ++i) gens.push_back(testing::random_homogeneous(r, rng, deg(rng), 3));
  Ideal ideal(r, gens);
  const auto& gb = ideal.groebner_basis();
  EXPECT_TRUE(verify_groebner(gb));
  for (const auto& g : gens) EXPECT_TRUE(ideal.contains(g));
  // Reduced: monic, no lead divides another term of the basis.
  for (const auto& g : gb.elements()) {
    EXPECT_EQ(g.leading_term().coef, 1u);
    for (const auto& h : gb.elements()) {
      if (&g == &h) continue;
      for (const auto& t : g.terms()) {
        EXPECT_FALSE(h.leading_term().mono.divides(t.mono));
      }
    }
  }
  // Uniqueness: generator order does not matter.
  std::reverse(gens.begin(), gens.end());
  EXPECT_EQ(strings(buchberger(r, gens)), strings(gb));
  // Membership of random combinations.
  auto f = gens[0] * testing::random_homogeneous(r, rng, 2, 3) +
           gens[1] * testing::random_homogeneous(r, rng, 1, 2);
  EXPECT_TRUE(ideal.contains(f));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIdeals, ::testing::Range(1, 25));

TEST(HilbertNumerator, MatchesEnumeration) {
  std::mt19937 rng(3);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + it % 4;
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + it % 6; ++k) gens.push_back(testing::random_monomial(n, rng, 4));
    for (int d = 0; d <= 7; ++d) {
      ASSERT_EQ(count_standard_monomials(gens, n, d),
                count_standard_monomials_naive(gens, n, d))
          << "iteration " << it << " degree " << d;
    }
  }
}

TEST(KrullDimension, MonomialAndSpecialCases) {
  auto r = PolyRing::make(5, {"a", "b", "c", "d"});
  EXPECT_EQ(krull_dimension(Ideal::zero(r)), 4);
  EXPECT_EQ(krull_dimension(Ideal::unit(r)), -1);
  EXPECT_EQ(krull_dimension(Ideal::maximal(r)), 0);
  EXPECT_EQ(krull_dimension(I(r, {"ab", "cd"})), 2);
  EXPECT_EQ(krull_dimension(I(r, {"ab", "bc", "cd", "da"})), 2);
  EXPECT_EQ(krull_dimension(I(r, {"abc"})), 3);
  EXPECT_EQ(height(I(r, {"ab", "cd"})), 2);
}

TEST(IdealOps, SumProductFrobenius) {
  auto r = PolyRing::make(3, {"x", "y"});
  auto a = I(r, {"x"});
  auto b = I(r, {"y", "x^2"});
  EXPECT_EQ(ideal_sum(a, b).generators().size(), 2u);
  EXPECT_TRUE(ideal_product(a, b).equals(I(r, {"xy", "x^3"})));
  EXPECT_TRUE(frobenius_power(I(r, {"x+y"}), 1).equals(I(r, {"x^3+y^3"})));
  EXPECT_TRUE(frobenius_power(Ideal::maximal(r), 2).equals(maximal_frobenius_power(r, 9)));
  EXPECT_THROW(checked_prime_power(3, 13), ExponentOverflow);
}

TEST(IdealOps, IntersectionByElimination) {
  auto r = PolyRing::make(7, {"x", "y", "z"});
  EXPECT_TRUE(intersect_by_elimination(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"xy"})));
  EXPECT_TRUE(intersect_by_elimination(I(r, {"x^2", "y"}), I(r, {"x", "y^2"}))
                  .equals(I(r, {"x^2", "xy", "y^2"})));
  auto J = intersect_by_elimination(I(r, {"x", "y"}), I(r, {"y", "z"}));
  EXPECT_TRUE(J.equals(I(r, {"y", "xz"})));
  EXPECT_TRUE(J.is_homogeneous());
}

}  // namespace
}  // namespace lyu
