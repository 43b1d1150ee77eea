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

#include "lyubeznik/ideal_ops.hpp"
#include "lyubeznik/linalg.hpp"
#include "lyubeznik/module.hpp"
#include "test_util.hpp"

namespace lyu {
namespace {

using testing::I;
using testing::P;

/// Independent count: dim F_d minus the rank of the degree-d strand.
std::uint64_t strand_dim(const PresentedModule& m, int d) {
  const auto& pres = m.presentation();
  const StrandBasis basis(m.ring()->nvars(), pres.target().twists(), d);
  return basis.size() - strand_rank(pres.columns(), pres.source().twists(),
                                    pres.target().twists(), m.ring()->nvars(), d,
                                    m.ring()->field());
}

GradedMatrix random_matrix(const RingPtr& r, std::mt19937& rng, std::size_t rows,
                           std::size_t cols) {
  std::uniform_int_distribution<int> tw(0, 1), deg(0, 2), nterms(0, 2);
  std::vector<int> tt(rows), st(cols);
  for (auto& t : tt) t = tw(rng);
  for (auto& s : st) s = 2 + tw(rng);
  std::vector<std::vector<Polynomial>> entries(rows, std::vector<Polynomial>(cols, Polynomial(r)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const int d = st[j] - tt[i];
      const int k = nterms(rng);
      if (d >= 0 && k > 0) entries[i][j] = testing::random_homogeneous(r, rng, d, k);
    }
  }
  return GradedMatrix::from_rows(FreeModule(r, tt), FreeModule(r, st), entries);
}

TEST(GradedMatrix, RejectsInhomogeneousColumns) {
  auto r = PolyRing::make(5, {"x", "y"});
  EXPECT_THROW(GradedMatrix::from_rows(FreeModule(r, {0}), FreeModule(r, {1}), {{P(r, "x^2")}}),
               InvalidArgument);
  EXPECT_NO_THROW(
      GradedMatrix::from_rows(FreeModule(r, {0}), FreeModule(r, {2}), {{P(r, "x^2")}}));
}

TEST(GradedMatrix, TransposeDualizesTwists) {
  auto r = PolyRing::make(5, {"x", "y"});
  auto m = GradedMatrix::row(r, {P(r, "x"), P(r, "y^2")});
  auto t = m.transpose();
  EXPECT_EQ(t.source().twists(), (std::vector<int>{0}));
  EXPECT_EQ(t.target().twists(), (std::vector<int>{-1, -2}));
  EXPECT_EQ(t.entry(1, 0), P(r, "y^2"));
  EXPECT_EQ(t.transpose().columns().size(), 2u);
}

TEST(ModuleBuchberger, DistinctPositionsAreABasis) {
  auto r = PolyRing::make(5, {"x", "y"});
  FreeModule f = FreeModule::untwisted(r, 2);
  auto gb = module_buchberger({ModuleElement::from_entries({P(r, "x"), Polynomial(r)}).terms(),
                               ModuleElement::from_entries({Polynomial(r), P(r, "y")}).terms()},
                              f);
  EXPECT_EQ(gb.elements().size(), 2u);
  EXPECT_TRUE(verify_module_groebner(gb));
}

TEST(Syzygies, Koszul) {
  auto r = PolyRing::make(5, {"x", "y"});
  auto m = GradedMatrix::row(r, {P(r, "x"), P(r, "y")});
  auto s = syzygies(m);
  ASSERT_EQ(s.ncols(), 1u);
  EXPECT_EQ(s.source().twists(), (std::vector<int>{2}));
  EXPECT_TRUE(compose(m, s).is_zero());
  // (y, -x) up to a scalar.
  EXPECT_EQ(s.entry(0, 0).monic(), P(r, "y"));
  EXPECT_EQ(s.entry(1, 0).monic(), P(r, "x"));
}

TEST(Syzygies, InjectiveMapHasNone) {
  auto r = PolyRing::make(5, {"x", "y"});
  EXPECT_EQ(syzygies(GradedMatrix::identity(FreeModule::untwisted(r, 1))).ncols(), 0u);
}

TEST(Syzygies, SharedFactor) {
  auto r = PolyRing::make(5, {"x", "y"});
  auto m = GradedMatrix::row(r, {P(r, "x^2"), P(r, "xy")});
  auto s = syzygies(m);
  ASSERT_EQ(s.ncols(), 1u);
  EXPECT_EQ(s.source().twists(), (std::vector<int>{3}));
  EXPECT_TRUE(compose(m, s).is_zero());
}

TEST(Syzygies, ZeroColumnsGiveUnitSyzygies) {
  auto r = PolyRing::make(5, {"x", "y"});
  auto m = GradedMatrix::zero(FreeModule::untwisted(r, 1), FreeModule(r, {1, 2}));
  EXPECT_EQ(syzygies(m).ncols(), 2u);
}

class RandomMatrices : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatrices, SyzygiesGenerateTheKernel) {
  std::mt19937 rng(GetParam());
  auto r = PolyRing::make(std::vector<std::uint32_t>{2, 3, 7, 101}[GetParam() % 4],
                          {"x", "y", "z"});
  const std::size_t rows = 1 + GetParam() % 3;
  const std::size_t cols = 1 + (GetParam() / 3) % 3;
  auto m = random_matrix(r, rng, rows, cols);
  auto s = syzygies(m);
  EXPECT_TRUE(compose(m, s).is_zero());
  auto raw = syzygies(m, false);
  EXPECT_TRUE(compose(m, raw).is_zero());
  // Minimal and raw generate the same submodule.
  auto gs = module_buchberger(s.columns(), m.source());
  for (const auto& c : raw.columns()) EXPECT_TRUE(gs.contains(c));
  // Rank-nullity on each degree: the syzygies span the whole kernel.
  for (int d = 2; d <= 5; ++d) {
    const std::size_t n = r->nvars();
    const StrandBasis src(n, m.source().twists(), d);
    const std::size_t image_rank = strand_rank(m.columns(), m.source().twists(),
                                               m.target().twists(), n, d, r->field());
    const std::size_t syz_rank = strand_rank(s.columns(), s.source().twists(),
                                             m.source().twists(), n, d, r->field());
    EXPECT_EQ(syz_rank + image_rank, src.size()) << "degree " << d;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Range(1, 25));

TEST(Subquotient, Examples) {
  auto r = PolyRing::make(7, {"x", "y"});
  FreeModule f = FreeModule::untwisted(r, 1);
  auto one = ModuleElement::from_entries({P(r, "1")}).terms();
  auto x = ModuleElement::from_entries({P(r, "x")}).terms();
  auto x2 = ModuleElement::from_entries({P(r, "x^2")}).terms();
  auto q = subquotient_presentation({one}, {x}, f);
  EXPECT_EQ(q.graded_piece_dim(0), 1u);
  EXPECT_EQ(q.graded_piece_dim(3), 1u);
  EXPECT_TRUE(prune(subquotient_presentation({x}, {x}, f)).rank() == 0);
  EXPECT_TRUE(subquotient_presentation({x}, {x}, f).is_zero());
  auto shifted = subquotient_presentation({x}, {x2}, f);
  EXPECT_EQ(shifted.generator_degrees(), (std::vector<int>{1}));
  for (int d = 0; d < 5; ++d) {
    EXPECT_EQ(shifted.graded_piece_dim(d), d >= 1 ? 1u : 0u);
    EXPECT_EQ(strand_dim(shifted, d), shifted.graded_piece_dim(d));
  }
  EXPECT_THROW(subquotient_presentation({x2}, {x}, f), LogicError);
}

TEST(GradedPieceDim, Examples) {
  auto r = PolyRing::make(5, {"x", "y"});
  auto k = PresentedModule::quotient(I(r, {"x", "y"}));
  EXPECT_EQ(k.graded_piece_dim(0), 1u);
  EXPECT_EQ(k.graded_piece_dim(1), 0u);
  auto free = PresentedModule::free(FreeModule(r, {2}));
  EXPECT_EQ(free.graded_piece_dim(2), 1u);
  EXPECT_EQ(free.graded_piece_dim(0), 0u);
  EXPECT_EQ(free.graded_piece_dim(3), 2u);
}

TEST(GradedPieceDim, MatchesStrandOracle) {
  std::mt19937 rng(17);
  for (int it = 0; it < 30; ++it) {
    auto r = PolyRing::make(it % 2 ? 3 : 32003, {"x", "y", "z"});
    auto m = PresentedModule(random_matrix(r, rng, 1 + it % 3, 1 + (it / 3) % 4));
    auto pm = prune(m);
    for (int d = -1; d <= 5; ++d) {
      ASSERT_EQ(m.graded_piece_dim(d), strand_dim(m, d)) << it << " " << d;
      ASSERT_EQ(pm.graded_piece_dim(d), m.graded_piece_dim(d)) << it << " " << d;
    }
  }
}

TEST(Prune, CancelsUnitEntries) {
  auto r = PolyRing::make(5, {"x", "y"});
  // coker [1 x; 0 y] on S^2 with twists (0,0), sources (0,1) is S/(y).
  auto m = PresentedModule(GradedMatrix::from_rows(
      FreeModule(r, {0, 0}), FreeModule(r, {0, 1}),
      {{P(r, "1"), P(r, "x")}, {Polynomial(r), P(r, "y")}}));
  auto p = prune(m);
  EXPECT_EQ(p.rank(), 1u);
  for (int d = 0; d < 4; ++d) EXPECT_EQ(p.graded_piece_dim(d), 1u);
}

TEST(Annihilator, Examples) {
  auto r = PolyRing::make(5, {"x", "y"});
  EXPECT_TRUE(annihilator(PresentedModule::quotient(I(r, {"x"}))).equals(I(r, {"x"})));
  EXPECT_TRUE(annihilator(PresentedModule::free(FreeModule::untwisted(r, 1))).is_zero());
  auto m = PresentedModule(GradedMatrix::from_rows(
      FreeModule(r, {0, 0}), FreeModule(r, {1, 1}),
      {{P(r, "x"), Polynomial(r)}, {Polynomial(r), P(r, "y")}}));
  EXPECT_TRUE(annihilator(m).equals(I(r, {"xy"})));
}

TEST(IdealOps, ColonExamples) {
  auto r = PolyRing::make(2, {"x", "y"});
  EXPECT_TRUE(ideal_colon(I(r, {"x^2y"}), I(r, {"y"})).equals(I(r, {"x^2"})));
  EXPECT_TRUE(ideal_colon(I(r, {"x^2y^2"}), I(r, {"xy"})).equals(I(r, {"xy"})));
  EXPECT_TRUE(ideal_colon(I(r, {"x^2+y^2"}), I(r, {"x+y"})).equals(I(r, {"x+y"})));
  EXPECT_THROW(ideal_colon(I(r, {"x"}), Ideal::zero(r)), InvalidArgument);
  // Inhomogeneous route.
  EXPECT_TRUE(ideal_colon(I(r, {"x^2-x"}), I(r, {"x-1"})).equals(I(r, {"x"})));
}

TEST(IdealOps, IntersectExamples) {
  auto r = PolyRing::make(7, {"x1", "x2", "x3", "x4"});
  EXPECT_TRUE(ideal_intersect(I(r, {"x1"}), I(r, {"x2"})).equals(I(r, {"x1x2"})));
  EXPECT_TRUE(ideal_intersect(I(r, {"x1", "x2"}), I(r, {"x1", "x2"})).equals(I(r, {"x1", "x2"})));
  EXPECT_TRUE(ideal_intersect(I(r, {"x1", "x2"}), I(r, {"x3", "x4"}))
                  .equals(I(r, {"x1x3", "x1x4", "x2x3", "x2x4"})));
}

class RandomIdealPairs : public ::testing::TestWithParam<int> {};

TEST_P(RandomIdealPairs, ColonAndIntersectionAgreeWithElimination) {
  std::mt19937 rng(100 + GetParam());
  auto r = PolyRing::make(std::vector<std::uint32_t>{2, 3, 5}[GetParam() % 3],
                          {"x", "y", "z"});
  std::uniform_int_distribution<int> deg(1, 2);
  std::vector<Polynomial> a, b;
  for (int i = 0; i < 2; ++i) a.push_back(testing::random_homogeneous(r, rng, deg(rng), 2));
  for (int i = 0; i < 2; ++i) b.push_back(testing::random_homogeneous(r, rng, deg(rng), 2));
  Ideal ia(r, a), ib(r, b);
  Ideal meet = ideal_intersect(ia, ib);
  EXPECT_TRUE(meet.equals(intersect_by_elimination(ia, ib)));
  EXPECT_TRUE(ia.contains(meet) && ib.contains(meet));
  EXPECT_TRUE(meet.contains(a[0] * b[1]));
  if (ib.is_zero()) return;
  Ideal c = ideal_colon(ia, ib);
  for (const auto& f : c.generators()) {
    for (const auto& g : b) EXPECT_TRUE(ia.contains(f * g));
  }
  EXPECT_TRUE(c.contains(ia));
  // Truncated colon agrees below the bound.
  Ideal ct = ideal_colon(ia, ib, 2);
  for (const auto& f : ct.generators()) EXPECT_LE(f.degree(), 2);
  for (const auto& f : c.generators()) {
    if (f.degree() <= 2) {
      EXPECT_TRUE(ct.contains(f));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIdealPairs, ::testing::Range(0, 24));

}  // namespace
}  // namespace lyu
