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

#include <map>
#include <random>

#include "lyubeznik/lyubeznik.hpp"
#include "test_util.hpp"

namespace lyu {
namespace {

using testing::I;

using Cells = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

Cells nonzero(const LyubeznikTable& t) {
  Cells out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.at(i, j)) out[{i, j}] = t.at(i, j);
    }
  }
  return out;
}

SimplicialComplex two_edges() { return SimplicialComplex(4, {{1, 2}, {3, 4}}); }

SimplicialComplex torus7() {
  std::vector<std::vector<std::size_t>> f;
  for (std::size_t i = 0; i < 7; ++i) {
    f.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    f.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return SimplicialComplex(7, f);
}

TEST(LyubeznikTable, HypersurfaceIsTrivial) {
  auto r = PolyRing::make(2, {"x", "y"});
  auto res = lyubeznik_table(I(r, {"xy"}), {.strict = true});
  EXPECT_EQ(res.table.d, 1);
  EXPECT_EQ(nonzero(res.table), (Cells{{{1, 1}, 1}}));
  EXPECT_FALSE(any_failed(res.checks));
  EXPECT_TRUE(res.table.fpure_certificate);
}

TEST(LyubeznikTable, TwoPlanesAcrossCharacteristics) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto a = stanley_reisner_ideal(two_edges(), p);
    auto res = lyubeznik_table(a, {.strict = true});
    EXPECT_EQ(nonzero(res.table), (Cells{{{0, 1}, 1}, {{2, 2}, 2}})) << p;
    EXPECT_FALSE(any_failed(res.checks));
    EXPECT_FALSE(any_failed(table_shape_checks(res.table)));
    const auto sd = sdim(a);
    ASSERT_TRUE(sd.certified);
    EXPECT_EQ(sd.value, 0);
    EXPECT_EQ(check_vanishing(res.table, sd).status, CheckStatus::kPass);
  }
}

TEST(LyubeznikTable, NotFPureIsRefused) {
  auto r = PolyRing::make(2, {"x", "y", "z"});
  EXPECT_THROW(lyubeznik_table(I(r, {"x^3+y^3+z^3"})), NotFPure);
  // The raw numbers remain available.
  auto raw = double_ext_table(I(r, {"x^3+y^3+z^3"}));
  EXPECT_FALSE(raw.table.fpure_certificate);
  EXPECT_EQ(raw.table.at(2, 2), 1u);
}

TEST(LyubeznikTable, FastModeMarksTheoremCells) {
  auto r = PolyRing::make(3, PolyRing::indexed_names("x", 4));
  // A prime of a regular ring: sdim = dim R = 2.
  auto res = lyubeznik_table(I(r, {"x1", "x2"}), {.fast = true});
  EXPECT_EQ(res.table.origin[0][1], CellOrigin::kTheoremZero);
  EXPECT_EQ(res.table.origin[2][2], CellOrigin::kComputed);
  EXPECT_EQ(nonzero(res.table), (Cells{{{2, 2}, 1}}));
  const auto v = check_vanishing(res.table, sdim(I(r, {"x1", "x2"})));
  EXPECT_EQ(v.status, CheckStatus::kPass);
}

TEST(LyubeznikTable, ThreadsDoNotChangeTheResult) {
  auto a = stanley_reisner_ideal(torus7(), 2);
  auto one = lyubeznik_table(a);
  auto four = lyubeznik_table(a, {.threads = 4});
  EXPECT_EQ(one.table.entries, four.table.entries);
}

TEST(LyubeznikTable, CheckpointHooks) {
  auto a = stanley_reisner_ideal(two_edges(), 3);
  Cells stored;
  TableOptions o;
  o.record = [&](std::size_t i, std::size_t j, std::uint64_t v) { stored[{i, j}] = v; };
  auto first = lyubeznik_table(a, o);
  EXPECT_EQ(stored.size(), 6u);  // the upper triangle of a 3x3 table

  // A stored value is used as is, even when it disagrees.
  stored[{2, 2}] = 7;
  TableOptions again;
  again.lookup = [&](std::size_t i, std::size_t j) -> std::optional<std::uint64_t> {
    auto it = stored.find({i, j});
    if (it == stored.end()) return std::nullopt;
    return it->second;
  };
  EXPECT_EQ(lyubeznik_table(a, again).table.at(2, 2), 7u);
}

TEST(LyubeznikTable, BudgetLeavesHoles) {
  auto a = stanley_reisner_ideal(torus7(), 2);
  const Ideal fresh(a.ring(), a.generators());
  (void)fresh.groebner_basis();  // so the gate itself fits the budget
  (void)fedder_is_fpure(fresh);
  const auto saved = pair_budget().load();
  pair_budget() = 3;
  TableResult res;
  try {
    res = double_ext_table(fresh);
  } catch (...) {
    pair_budget() = saved;
    throw;
  }
  pair_budget() = saved;
  EXPECT_FALSE(res.table.complete());
  for (auto [i, j] : res.table.holes()) EXPECT_EQ(res.table.origin[i][j], CellOrigin::kHole);
  EXPECT_NE(res.table.render().find('?'), std::string::npos);
}

TEST(Checks, ShapeAndVanishingNegativeControls) {
  auto a = stanley_reisner_ideal(two_edges(), 2);
  auto t = lyubeznik_table(a).table;
  auto bad = t;
  bad.entries[2][0] = 1;
  bad.entries[2][2] = 0;
  auto shape = table_shape_checks(bad);
  EXPECT_EQ(shape[0].status, CheckStatus::kFail);
  EXPECT_EQ(shape[1].status, CheckStatus::kFail);

  auto corrupt = t;
  corrupt.entries[0][0] = 1;
  EXPECT_EQ(check_vanishing(corrupt, {0, true}).status, CheckStatus::kFail);
  EXPECT_EQ(check_vanishing(t, {0, false}).status, CheckStatus::kSkipped);
}

TEST(Projective, TwoDisjointLines) {
  auto a = stanley_reisner_ideal(two_edges(), 3);
  auto t = projective_table(a).table;
  EXPECT_EQ(t.mode, TableMode::kProjective);
  EXPECT_EQ(t.at(0, 1), 1u);  // t - 1 with t = 2 components
  EXPECT_EQ(check_projective_duality(t, true).status, CheckStatus::kPass);
  EXPECT_EQ(check_projective_duality(t, false).status, CheckStatus::kSkipped);
  EXPECT_EQ(check_theorem_d(t, two_edges(), 3, true, true).status, CheckStatus::kPass);
  EXPECT_EQ(check_theorem_d(t, two_edges(), 3, true, false).status, CheckStatus::kSkipped);

  auto corrupt = t;
  corrupt.entries[2][2] = 3;
  EXPECT_EQ(check_projective_duality(corrupt, true).status, CheckStatus::kFail);
  EXPECT_EQ(check_theorem_d(corrupt, two_edges(), 3, true, true).status, CheckStatus::kFail);
}

TEST(Projective, HyperplaneAndLocalMode) {
  auto r = PolyRing::make(5, {"x1", "x2", "x3"});
  auto t = projective_table(I(r, {"x1"})).table;
  EXPECT_EQ(t.at(0, 1), 0u);
  EXPECT_EQ(t.at(2, 2), 1u);
  EXPECT_EQ(check_projective_duality(t, true).status, CheckStatus::kPass);
  EXPECT_EQ(check_projective_duality(lyubeznik_table(I(r, {"x1"})).table, true).status,
            CheckStatus::kSkipped);
  EXPECT_THROW(projective_table(Ideal::maximal(r)), InvalidArgument);
}

TEST(Projective, TheoremDOnSurfaces) {
  // Torus: t = 1, h^2 = dim H~^1 = 2.
  auto a = stanley_reisner_ideal(torus7(), 3);
  auto t = projective_table(a).table;
  EXPECT_EQ(nonzero(t), (Cells{{{0, 2}, 2}, {{2, 3}, 2}, {{3, 3}, 1}}));
  EXPECT_EQ(check_theorem_d(t, torus7(), 3, true, true).status, CheckStatus::kPass);
  EXPECT_EQ(check_projective_duality(t, true).status, CheckStatus::kPass);

  // Two disjoint hollow triangles: t = 2, dim X = 1.
  SimplicialComplex two_circles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  auto b = projective_table(stanley_reisner_ideal(two_circles, 2)).table;
  EXPECT_EQ(nonzero(b), (Cells{{{0, 1}, 1}, {{2, 2}, 2}}));
  EXPECT_EQ(check_theorem_d(b, two_circles, 2, true, true).status, CheckStatus::kPass);
}

class RandomOracle : public ::testing::TestWithParam<int> {};

TEST_P(RandomOracle, TableMatchesStrands) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()) * 104729u + 17u);
  const std::size_t n = 3 + GetParam() % 3;
  const std::uint32_t p = GetParam() % 2 ? 2 : 3;
  auto r = PolyRing::make(p, PolyRing::indexed_names("x", n));
  std::vector<Polynomial> gens;
  std::uniform_int_distribution<int> count(1, 4);
  for (int k = count(rng); k > 0; --k) {
    Monomial m = testing::random_monomial(n, rng, 3);
    for (std::size_t v = 0; v < n; ++v) m.set(v, std::min<std::uint32_t>(m[v], 1));
    gens.push_back(Polynomial::monomial(r, 1, m));
  }
  const Ideal ideal(r, gens);
  if (ideal.is_unit()) GTEST_SKIP();
  auto res = lyubeznik_table(ideal, {.strict = true, .verify = true});
  EXPECT_FALSE(any_failed(res.checks)) << ideal.to_string();
  EXPECT_FALSE(any_failed(table_shape_checks(res.table)));
  const auto v = check_vanishing(res.table, sdim(ideal));
  EXPECT_EQ(v.status, CheckStatus::kPass) << ideal.to_string() << ": " << v.details;
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomOracle, ::testing::Range(0, 12));

}  // namespace
}  // namespace lyu
