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

// F-purity and splitting data of R = S/I for homogeneous I.
//
// Everything reduces to colon ideals through the trace map Φ that generates
// Hom_S(F^e_* S, S) as an F^e_* S-module (q = p^e):
//
//  * Hom_R(F^e_* R, R) is the image of F^e_*(I^[q] : I) · Φ, and Φ(F^e_* s)
//    lies in m for all multiples of s exactly when s ∈ m^[q].
//  * R is F-pure iff some map hits a unit: (I^[p] : I) ⊄ m^[p] (Fedder).
//  * I_e(R) = {r : φ(F^e_* r) ∈ m for all φ} has preimage
//    m^[q] : (I^[q] : I) in S (it contains I automatically).
//  * J ⊇ I is compatible iff c J ⊆ J^[q] for every c ∈ I^[q] : I, that is
//    (I^[q] : I) ⊆ (J^[q] : J).
//
// A homogeneous element of degree > n(q-1) always lies in m^[q], so colons
// that are only tested against m^[q] can be truncated at that degree.

#ifndef LYUBEZNIK_FSING_HPP_
#define LYUBEZNIK_FSING_HPP_

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/groebner.hpp"
#include "lyubeznik/ideal_ops.hpp"
#include "lyubeznik/resolution.hpp"

namespace lyu {

namespace detail {

inline void require_graded_proper(const Ideal& i) {
  if (!i.is_homogeneous()) throw InvalidArgument("expected a homogeneous ideal");
  if (i.is_unit()) throw InvalidArgument("expected a proper ideal");
}

/// Whether every term of f is divisible by some x_k^q.
inline bool in_frobenius_maximal(const Polynomial& f, std::uint64_t q) {
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (std::size_t k = 0; k < t.mono.size() && !divisible; ++k) divisible = t.mono[k] >= q;
    if (!divisible) return false;
  }
  return true;
}

/// Maps f into `target`, sending variable k to variable to[k]. Variables
/// that do not occur in f may map anywhere.
inline Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                                  const std::vector<std::size_t>& to) {
  Vec v;
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t k = 0; k < to.size(); ++k) {
      if (t.mono[k]) m.set(to[k], t.mono[k]);
    }
    v.push_back(Term{m, 0, t.coef});
  }
  return Polynomial(target, std::move(v));
}

inline int frobenius_socle_degree(const Ideal& i, std::uint64_t q) {
  return static_cast<int>(i.ring()->nvars() * (q - 1));
}

}  // namespace detail

/// I^[q] : I, truncated at degree n(q-1) when `truncate` is set.
inline Ideal frobenius_colon(const Ideal& i, unsigned e, bool truncate) {
  const std::uint64_t q = checked_prime_power(i.ring()->characteristic(), e);
  if (i.is_zero()) return Ideal::unit(i.ring());
  std::optional<int> bound;
  if (truncate) bound = detail::frobenius_socle_degree(i, q);
  return ideal_colon(frobenius_power(i, e), i, bound);
}

/// Fedder's criterion at the homogeneous maximal ideal.
inline bool fedder_is_fpure(const Ideal& i) {
  detail::require_graded_proper(i);
  const std::uint32_t p = i.ring()->characteristic();
  const Ideal c = frobenius_colon(i, 1, true);
  for (const auto& g : c.generators()) {
    if (!detail::in_frobenius_maximal(g, p)) return true;
  }
  return false;
}

/// Preimage in S of I_e(R).
inline Ideal splitting_ideal(const Ideal& i, unsigned e) {
  detail::require_graded_proper(i);
  const std::uint64_t q = checked_prime_power(i.ring()->characteristic(), e);
  const Ideal mq = maximal_frobenius_power(i.ring(), q);
  const Ideal c = frobenius_colon(i, e, true);
  return ideal_sum(ideal_colon(mq, c), i);
}

/// True when the reduced Groebner basis of I consists of linear forms, so
/// S/I is a polynomial ring.
inline bool is_regular_quotient(const Ideal& i) {
  for (const auto& g : i.groebner_basis().elements()) {
    if (g.degree() != 1 || !g.is_homogeneous()) return false;
  }
  return true;
}

struct SplittingData {
  std::vector<Ideal> chain;  // I_1 ⊇ I_2 ⊇ ...
  std::optional<unsigned> stabilized_at;
  Ideal candidate_prime;
  std::optional<int> sdim;  // set when certified
  unsigned e_max = 0;
  bool regular = false;
  // Variables absent from every generator. R is then R'[those], P(R) is
  // extended from P(R'), and the chain is that of R' extended to S.
  std::size_t free_variables = 0;

  bool certified() const { return stabilized_at.has_value() || regular; }
};

/// Computes I_1, I_2, ... up to e_max and stops at the first e with
/// I_e = I_{e-1}. Regular quotients are special-cased: P(R) = 0.
///
/// A free variable t keeps t^q in every I_e, so the chain of R'[t] never
/// stabilizes even though P(R'[t]) = P(R')R'[t]; free variables are split off
/// first.
inline SplittingData splitting_prime(const Ideal& i, unsigned e_max = 5) {
  detail::require_graded_proper(i);
  if (e_max == 0) throw InvalidArgument("e_max must be positive");
  SplittingData out{{}, std::nullopt, i, std::nullopt, e_max, false, 0};
  const RingPtr& ring = i.ring();
  std::uint32_t used = 0;
  for (const auto& g : i.generators()) {
    for (const auto& t : g.terms()) used |= t.mono.support();
  }
  const std::size_t n = ring->nvars();
  if (!i.is_zero() && static_cast<std::size_t>(std::popcount(used)) < n) {
    std::vector<std::string> names;
    std::vector<std::size_t> down(n, 0), up;
    for (std::size_t k = 0; k < n; ++k) {
      if (used & (1u << k)) {
        down[k] = names.size();
        up.push_back(k);
        names.push_back(ring->names()[k]);
      }
    }
    const RingPtr sub = PolyRing::make(ring->characteristic(), names);
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(detail::remap_variables(g, sub, down));
    SplittingData inner = splitting_prime(Ideal(sub, std::move(gens)), e_max);
    auto lift = [&](const Ideal& a) {
      std::vector<Polynomial> out_gens;
      for (const auto& g : a.generators()) out_gens.push_back(detail::remap_variables(g, ring, up));
      return Ideal(ring, std::move(out_gens));
    };
    for (const auto& c : inner.chain) out.chain.push_back(lift(c));
    out.stabilized_at = inner.stabilized_at;
    out.candidate_prime = lift(inner.candidate_prime);
    out.regular = inner.regular;
    out.free_variables = n - names.size();
    if (inner.sdim) out.sdim = *inner.sdim + static_cast<int>(out.free_variables);
    return out;
  }
  if (is_regular_quotient(i)) {
    out.regular = true;
    out.sdim = krull_dimension(i);
    return out;
  }
  if (!fedder_is_fpure(i)) {
    throw NotFPure("the splitting prime is only defined for F-pure rings");
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    out.chain.push_back(splitting_ideal(i, e));
    const std::size_t k = out.chain.size();
    LYU_ASSERT(out.chain.back().contains(i), "splitting ideal must contain I");
    if (k >= 2) {
      LYU_ASSERT(out.chain[k - 2].contains(out.chain[k - 1]), "splitting ideals must descend");
      if (out.chain[k - 1].contains(out.chain[k - 2])) {
        out.stabilized_at = e - 1;
        break;
      }
    }
  }
  out.candidate_prime = out.chain.back();
  if (out.stabilized_at) out.sdim = krull_dimension(out.candidate_prime);
  return out;
}

struct Certified {
  bool value = false;
  bool certified = false;  // false: only checked for e <= e_max
  unsigned e_checked = 0;
};

struct SdimResult {
  int value = 0;
  bool certified = false;
};

inline SdimResult sdim(const Ideal& i, unsigned e_max = 5) {
  const SplittingData d = splitting_prime(i, e_max);
  if (d.sdim && d.certified()) return SdimResult{*d.sdim, true};
  return SdimResult{krull_dimension(d.candidate_prime), false};
}

/// Whether J (given by its preimage in S) is compatible, tested for
/// e = 1..e_max. A negative answer is definitive; a positive one is only
/// certified up to e_max.
inline Certified is_compatible(const Ideal& i, const Ideal& j, unsigned e_max = 1) {
  check_same_ring(i, j);
  detail::require_graded_proper(i);
  if (!j.is_homogeneous()) throw InvalidArgument("expected a homogeneous ideal");
  if (!j.contains(i)) throw InvalidArgument("compatibility needs I ⊆ J");
  if (j.is_unit()) return Certified{true, true, 0};
  Certified out{true, false, 0};
  for (unsigned e = 1; e <= e_max; ++e) {
    const Ideal c = frobenius_colon(i, e, false);
    const Ideal jq = frobenius_power(j, e);
    for (const auto& g : c.generators()) {
      for (const auto& f : j.generators()) {
        if (!jq.contains(g * f)) return Certified{false, true, e};
      }
    }
    out.e_checked = e;
  }
  return out;
}

/// ∩_{i ≠ ht I} ann Ext^i(S/I, S); the unit ideal when S/I is Cohen-Macaulay.
/// Cuts out the non-CM locus when S/I is equidimensional, which the caller
/// has to assert.
inline Ideal ncm_ideal(const Ideal& i) {
  detail::require_graded_proper(i);
  const std::size_t n = i.ring()->nvars();
  const std::size_t ht = static_cast<std::size_t>(height(i));
  const FreeResolution res = free_resolution(PresentedModule::quotient(i));
  std::optional<Ideal> acc;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == ht) continue;
    const PresentedModule ext = ext_module(res, k);
    if (ext.rank() == 0) continue;
    const Ideal a = annihilator(ext);
    acc = acc ? ideal_intersect(*acc, a) : a;
  }
  return acc ? *acc : Ideal::unit(i.ring());
}

}  // namespace lyu

#endif  // LYUBEZNIK_FSING_HPP_
