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

#include "lyubeznik/field.hpp"
#include "lyubeznik/monomial.hpp"

namespace lyu {
namespace {

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(4), InvalidArgument);
  EXPECT_THROW(PrimeField(91), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, InverseRoundTrip) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32003u, 2147483647u}) {
    PrimeField k(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 500); ++a) {
      ASSERT_EQ(k.mul(a, k.inv(a)), 1u) << "p=" << p << " a=" << a;
    }
    EXPECT_THROW(k.inv(0), InvalidArgument);
  }
}

TEST(PrimeField, FermatAndSignedRepresentatives) {
  PrimeField k(101);
  for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ(k.pow(a, 100), 1u);
  EXPECT_EQ(k.from_int(-1), 100u);
  EXPECT_EQ(k.to_signed(100), -1);
  EXPECT_EQ(k.to_signed(50), 50);
  EXPECT_EQ(k.sub(3, 5), 99u);
}

TEST(Monomial, DivisibilityLcmGcd) {
  Monomial a{2, 0, 1};
  Monomial b{1, 3, 0};
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE((Monomial{1, 0, 0}).divides(a));
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 0, 0}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_TRUE((Monomial{0, 1, 0}).coprime(a));
}

TEST(Monomial, DegrevlexBreaksTiesOnLastVariable) {
  // x*z < y^2 in degrevlex, x*z > y^2 in lex.
  Monomial xz{1, 0, 1};
  Monomial yy{0, 2, 0};
  EXPECT_TRUE(compare(xz, yy, MonomialOrder::degrevlex) < 0);
  EXPECT_TRUE(compare(xz, yy, MonomialOrder::lex) > 0);
  // Higher degree wins in degrevlex.
  EXPECT_TRUE(compare(Monomial{0, 0, 3}, Monomial{1, 1, 0}, MonomialOrder::degrevlex) > 0);
}

TEST(Monomial, EliminationOrderPutsLastVariableFirst) {
  Monomial t{0, 0, 1};
  Monomial big{5, 5, 0};
  EXPECT_TRUE(compare(t, big, MonomialOrder::elim_last) > 0);
}

TEST(Monomial, ExponentBound) {
  Monomial a(2);
  EXPECT_THROW(a.set(0, kMaxExponent + 1), ExponentOverflow);
  Monomial b = Monomial::variable(2, 0, kMaxExponent);
  EXPECT_THROW(b * b, ExponentOverflow);
  EXPECT_THROW((Monomial{1, 0}).pow(kMaxExponent + 1), ExponentOverflow);
}

TEST(Monomial, LengthMismatchIsAnError) {
  EXPECT_THROW(compare(Monomial{1, 0}, Monomial{1, 0, 0}, MonomialOrder::degrevlex),
               InvalidArgument);
}

}  // namespace
}  // namespace lyu
