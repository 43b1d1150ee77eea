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

// Intersections, colon ideals and annihilators. Homogeneous input goes
// through `modulo` (a syzygy computation), which accepts a degree bound;
// anything else falls back to elimination.

#ifndef LYUBEZNIK_IDEAL_OPS_HPP_
#define LYUBEZNIK_IDEAL_OPS_HPP_

#include <optional>
#include <vector>

#include "lyubeznik/groebner.hpp"
#include "lyubeznik/module.hpp"

namespace lyu {

namespace detail {

inline std::vector<Polynomial> entries_of_rank_one(const RingPtr& ring, const GradedMatrix& m) {
  std::vector<Polynomial> out;
  for (const auto& c : m.columns()) out.push_back(Polynomial::from_sorted(ring, c));
  return out;
}

/// Exact quotient f / g; throws if g does not divide f.
inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& k = f.ring()->field();
  const auto ord = f.ring()->term_order();
  Vec rest = f.terms();
  Vec q;
  const Term& lg = g.leading_term();
  const Coeff inv = k.inv(lg.coef);
  while (!rest.empty()) {
    const Term t = rest.front();
    if (!lg.mono.divides(t.mono)) throw LogicError("inexact polynomial division");
    const Monomial m = t.mono / lg.mono;
    const Coeff c = k.mul(t.coef, inv);
    q.push_back(Term{m, 0, c});
    vec::axpy(rest, k.neg(c), &m, g.terms(), k, ord);
  }
  return Polynomial::from_sorted(f.ring(), std::move(q));
}

}  // namespace detail

/// I ∩ J. Homogeneous ideals use syzygies; with a degree bound only the
/// generators of degree <= bound are produced.
inline Ideal ideal_intersect(const Ideal& i, const Ideal& j,
                             std::optional<int> degree_bound = std::nullopt) {
  check_same_ring(i, j);
  if (i.is_zero() || j.is_zero()) return Ideal::zero(i.ring());
  if (!i.is_homogeneous() || !j.is_homogeneous()) {
    LYU_ASSERT(!degree_bound, "degree bounds need homogeneous input");
    return intersect_by_elimination(i, j);
  }
  const GradedMatrix a = GradedMatrix::row(i.ring(), i.generators());
  const GradedMatrix b = GradedMatrix::row(j.ring(), j.generators());
  const GradedMatrix u = modulo(a, b, degree_bound);
  std::vector<Polynomial> gens;
  for (const auto& c : u.columns()) gens.push_back(Polynomial::from_sorted(i.ring(), a.apply(c)));
  return Ideal(i.ring(), detail::interreduce(i.ring(), std::move(gens)));
}

/// I : (g) for a single polynomial g.
inline Ideal ideal_colon(const Ideal& i, const Polynomial& g,
                         std::optional<int> degree_bound = std::nullopt) {
  if (g.is_zero()) throw InvalidArgument("colon by the zero ideal");
  if (!same_ring(g.ring(), i.ring())) throw RingMismatch();
  if (i.is_homogeneous() && g.is_homogeneous()) {
    const GradedMatrix a = GradedMatrix::row(i.ring(), {g});
    const GradedMatrix b = GradedMatrix::row(i.ring(), i.generators());
    std::optional<int> bound;
    if (degree_bound) bound = *degree_bound + g.degree();
    const GradedMatrix u = modulo(a, b, bound);
    return Ideal(i.ring(), detail::entries_of_rank_one(i.ring(), u));
  }
  LYU_ASSERT(!degree_bound, "degree bounds need homogeneous input");
  const Ideal meet = intersect_by_elimination(i, Ideal(i.ring(), {g}));
  std::vector<Polynomial> q;
  for (const auto& f : meet.generators()) q.push_back(detail::exact_quotient(f, g));
  return Ideal(i.ring(), std::move(q));
}

/// I : J = {f : f J ⊆ I}, as the intersection of I : (g) over generators g.
inline Ideal ideal_colon(const Ideal& i, const Ideal& j,
                         std::optional<int> degree_bound = std::nullopt) {
  check_same_ring(i, j);
  if (j.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : j.generators()) {
    Ideal c = ideal_colon(i, g, degree_bound);
    acc = acc ? ideal_intersect(*acc, c, degree_bound) : c;
    if (acc->is_zero()) break;
  }
  return *acc;
}

/// ann(M) = ∩_i (relations : e_i).
inline Ideal annihilator(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  if (m.rank() == 0) return Ideal::unit(ring);
  const GradedMatrix& pres = m.presentation();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const GradedMatrix ei(pres.target(), FreeModule(ring, {pres.target().twist(i)}),
                          {ModuleElement::basis_vector(ring, i).terms()});
    Ideal c(ring, detail::entries_of_rank_one(ring, modulo(ei, pres)));
    acc = acc ? ideal_intersect(*acc, c) : c;
    if (acc->is_zero()) break;
  }
  return *acc;
}

}  // namespace lyu

#endif  // LYUBEZNIK_IDEAL_OPS_HPP_
