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

#include <random>

#include "lyubeznik/fsing.hpp"
#include "lyubeznik/sr_oracle.hpp"
#include "test_util.hpp"

namespace lyu {
namespace {

using testing::I;
using testing::P;

TEST(Fedder, HandComputedExamples) {
  auto r2 = PolyRing::make(2, {"x", "y"});
  EXPECT_TRUE(fedder_is_fpure(I(r2, {"xy"})));
  EXPECT_FALSE(fedder_is_fpure(I(r2, {"x^2"})));
  EXPECT_TRUE(fedder_is_fpure(Ideal::zero(r2)));

  // f^6 has x^6y^6z^6 with coefficient 6!/(2!)^3 = 90 = 6 mod 7.
  auto r7 = PolyRing::make(7, {"x", "y", "z"});
  EXPECT_TRUE(fedder_is_fpure(I(r7, {"x^3+y^3+z^3"})));
  // At p = 2 the cubic cone is supersingular: f ∈ m^[2] after one Frobenius.
  auto r2c = PolyRing::make(2, {"x", "y", "z"});
  EXPECT_FALSE(fedder_is_fpure(I(r2c, {"x^3+y^3+z^3"})));
}

TEST(Fedder, RejectsBadInput) {
  auto r = PolyRing::make(3, {"x", "y"});
  EXPECT_THROW(fedder_is_fpure(I(r, {"x^2+y"})), InvalidArgument);
  EXPECT_THROW(fedder_is_fpure(Ideal::unit(r)), InvalidArgument);
}

TEST(Fedder, CubicConeMatchesHasseInvariant) {
  // Elliptic curve x^3+y^3+z^3 is ordinary exactly when p = 1 mod 3.
  for (std::uint32_t p : {2u, 5u, 7u, 11u, 13u}) {
    auto r = PolyRing::make(p, {"x", "y", "z"});
    EXPECT_EQ(fedder_is_fpure(I(r, {"x^3+y^3+z^3"})), p % 3 == 1) << p;
  }
}

TEST(Fedder, SquarefreeMonomialIdealsAreFPure) {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = PolyRing::make(p, PolyRing::indexed_names("x", 4));
    for (int t = 0; t < 6; ++t) {
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) {
        Monomial m = testing::random_monomial(4, rng, 3);
        for (std::size_t v = 0; v < 4; ++v) m.set(v, std::min<std::uint32_t>(m[v], 1));
        gens.push_back(Polynomial::monomial(r, 1, m));
      }
      const Ideal ideal(r, gens);
      EXPECT_TRUE(fedder_is_fpure(ideal)) << ideal.to_string();
    }
  }
}

TEST(Fedder, IndependentOfGenerators) {
  std::mt19937 rng(5);
  auto r = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  const Ideal two_planes = I(r, {"x1x3", "x1x4", "x2x3", "x2x4"});
  const Ideal cubic = I(r, {"x1^3+x2^3+x3^3"});
  for (const Ideal* base : {&two_planes, &cubic}) {
    const bool expected = fedder_is_fpure(*base);
    for (int t = 0; t < 3; ++t) {
      // Same ideal, generators mixed by random same-degree combinations.
      std::vector<Polynomial> gens = base->generators();
      std::vector<Polynomial> mixed;
      std::uniform_int_distribution<std::uint32_t> c(0, 2);
      for (std::size_t a = 0; a < gens.size(); ++a) {
        Polynomial g = gens[a];
        for (std::size_t b = 0; b < gens.size(); ++b) {
          if (b != a && gens[b].degree() == g.degree()) g = g + gens[b] * Polynomial::constant(r, c(rng));
        }
        mixed.push_back(g);
      }
      mixed.push_back(gens.front() * P(r, "x1+x4"));
      const Ideal regen(r, mixed);
      ASSERT_TRUE(regen.equals(*base));
      EXPECT_EQ(fedder_is_fpure(regen), expected);
    }
  }
}

TEST(SplittingIdeal, HandComputedExamples) {
  auto r = PolyRing::make(2, {"x", "y"});
  EXPECT_TRUE(splitting_ideal(I(r, {"xy"}), 1).equals(Ideal::maximal(r)));
  for (unsigned e : {1u, 2u}) {
    const std::uint64_t q = checked_prime_power(2, e);
    EXPECT_TRUE(splitting_ideal(Ideal::zero(r), e).equals(maximal_frobenius_power(r, q)));
  }
}

TEST(SplittingIdeal, ChainDescendsBetweenIAndM) {
  std::vector<Ideal> tests;
  auto r3 = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  tests.push_back(I(r3, {"x1x3", "x1x4", "x2x3", "x2x4"}));
  tests.push_back(I(r3, {"x1x2x3"}));
  auto r7 = PolyRing::make(7, {"x", "y", "z"});
  tests.push_back(I(r7, {"x^3+y^3+z^3"}));
  for (const auto& t : tests) {
    const Ideal m = Ideal::maximal(t.ring());
    const Ideal i1 = splitting_ideal(t, 1);
    const Ideal i2 = splitting_ideal(t, 2);
    EXPECT_TRUE(i1.contains(i2)) << t.to_string();
    EXPECT_TRUE(i2.contains(t));
    EXPECT_TRUE(m.contains(i1));
  }
}

TEST(SplittingPrime, Examples) {
  auto r = PolyRing::make(2, {"x", "y"});
  auto d = splitting_prime(I(r, {"xy"}));
  EXPECT_TRUE(d.certified());
  EXPECT_TRUE(d.candidate_prime.equals(Ideal::maximal(r)));
  EXPECT_EQ(d.sdim, 0);

  auto zero = splitting_prime(Ideal::zero(r));
  EXPECT_TRUE(zero.regular);
  EXPECT_EQ(zero.sdim, 2);
  EXPECT_EQ(sdim(Ideal::zero(r)).value, 2);

  auto r4 = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  EXPECT_EQ(sdim(I(r4, {"x1", "x2"})).value, 2);
  EXPECT_TRUE(sdim(I(r4, {"x1", "x2"})).certified);

  auto two = splitting_prime(I(r4, {"x1x3", "x1x4", "x2x3", "x2x4"}));
  ASSERT_TRUE(two.stabilized_at.has_value());
  EXPECT_LE(*two.stabilized_at, 2u);
  EXPECT_TRUE(is_compatible(I(r4, {"x1x3", "x1x4", "x2x3", "x2x4"}), two.candidate_prime, 2).value);

  auto r2 = PolyRing::make(2, {"x", "y"});
  EXPECT_THROW(splitting_prime(I(r2, {"x^2"})), NotFPure);
}

TEST(SplittingPrime, FreeVariablesAreSplitOff) {
  auto r = PolyRing::make(3, PolyRing::indexed_names("x", 5));
  const Ideal a = I(r, {"x1x3"});
  auto d = splitting_prime(a, 3);
  EXPECT_EQ(d.free_variables, 3u);
  EXPECT_TRUE(d.certified());
  EXPECT_TRUE(d.candidate_prime.equals(I(r, {"x1", "x3"})));
  EXPECT_EQ(d.sdim, 3);
  EXPECT_TRUE(is_compatible(a, d.candidate_prime, 2).value);
  // Without the split the chain keeps x2^q, x4^q, x5^q and never settles.
  EXPECT_FALSE(splitting_ideal(a, 2).contains(splitting_ideal(a, 1)));
}

TEST(Compatibility, HandComputedExamples) {
  auto r = PolyRing::make(2, {"x", "y"});
  const Ideal xy = I(r, {"xy"});
  EXPECT_TRUE(is_compatible(xy, I(r, {"x"})).value);
  // (x+y) does not contain xy, so it is not an ideal of R at all.
  EXPECT_THROW(is_compatible(xy, I(r, {"x+y"})), InvalidArgument);
  EXPECT_THROW(is_compatible(xy, I(r, {"x^2"})), InvalidArgument);
  // (x+y)^2 + (xy) does contain I, and xy (x+y)^2 ∉ ((x+y)^4, x^2 y^2).
  auto bad = is_compatible(xy, I(r, {"x^2+y^2", "xy"}));
  EXPECT_FALSE(bad.value);
  EXPECT_TRUE(bad.certified);
  EXPECT_TRUE(is_compatible(xy, Ideal::maximal(r), 2).value);
}

TEST(Compatibility, MaximalIdealOnlyWhenSdimIsZero) {
  // m is compatible iff the splitting prime is m; a polynomial ring keeps
  // m out of reach of its splittings.
  auto r = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  EXPECT_FALSE(is_compatible(Ideal::zero(r), Ideal::maximal(r)).value);
  EXPECT_FALSE(is_compatible(I(r, {"x1", "x2"}), Ideal::maximal(r)).value);
  EXPECT_TRUE(is_compatible(I(r, {"x1x3", "x1x4", "x2x3", "x2x4"}), Ideal::maximal(r)).value);
}

TEST(Compatibility, AssociatedPrimesOfExtAreCompatible) {
  // Two planes: Ext^3(S/I, S) is supported at m, Ext^2 at both planes.
  auto r = PolyRing::make(5, PolyRing::indexed_names("x", 4));
  const Ideal two = I(r, {"x1x3", "x1x4", "x2x3", "x2x4"});
  EXPECT_TRUE(is_compatible(two, I(r, {"x1", "x2"}), 2).value);
  EXPECT_TRUE(is_compatible(two, I(r, {"x3", "x4"}), 2).value);
  EXPECT_TRUE(is_compatible(two, Ideal::maximal(r), 2).value);
  // (x1, x3) does not contain I.
  EXPECT_THROW(is_compatible(two, I(r, {"x1", "x3"})), InvalidArgument);
  // Only sums of minimal primes survive every splitting; the prime of the
  // vertex {4} is not one of them.
  EXPECT_FALSE(is_compatible(two, I(r, {"x1", "x2", "x3"})).value);
}

TEST(NonCMIdeal, Examples) {
  auto r3 = PolyRing::make(3, {"x", "y", "z"});
  EXPECT_TRUE(ncm_ideal(I(r3, {"x", "y"})).is_unit());
  auto r4 = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  const Ideal two = I(r4, {"x1x3", "x1x4", "x2x3", "x2x4"});
  const Ideal a = ncm_ideal(two);
  EXPECT_TRUE(a.equals(Ideal::maximal(r4))) << a.to_string();
  EXPECT_TRUE(is_compatible(two, a, 2).value);
}

}  // namespace
}  // namespace lyu
