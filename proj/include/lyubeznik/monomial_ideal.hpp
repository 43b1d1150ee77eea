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

// Combinatorics of monomial ideals: minimalization, Hilbert numerators,
// standard-monomial counts and dimension via minimum hitting sets.

#ifndef LYUBEZNIK_MONOMIAL_IDEAL_HPP_
#define LYUBEZNIK_MONOMIAL_IDEAL_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/monomial.hpp"

namespace lyu {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Univariate integer polynomial, coefficient i is the coefficient of t^i.
using HilbertPoly = std::vector<__int128>;

namespace detail {

inline void hp_add_shifted(HilbertPoly& acc, const HilbertPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

inline HilbertPoly hp_numerator(std::vector<Monomial> gens, std::size_t n) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return HilbertPoly{1};
  // Pairwise coprime generators: product of (1 - t^deg).
  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    if (g.support() & seen) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    HilbertPoly acc{1};
    for (const auto& g : gens) {
      HilbertPoly next(acc.size() + g.degree(), 0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i];
        next[i + g.degree()] -= acc[i];
      }
      acc.swap(next);
    }
    return acc;
  }
  // Pivot x_v^e on the variable occurring in most generators that are not
  // pure powers, e a median exponent among those. Such a pivot is never in J,
  // and J : pivot is strictly smaller, so the recursion terminates.
  auto pure_power = [](const Monomial& g) { return std::popcount(g.support()) == 1; };
  std::size_t best_var = 0;
  std::size_t best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = 0;
    for (const auto& g : gens) c += g[v] > 0 && !pure_power(g);
    if (c > best_count) {
      best_count = c;
      best_var = v;
    }
  }
  std::vector<std::uint32_t> exps;
  for (const auto& g : gens) {
    if (g[best_var] && !pure_power(g)) exps.push_back(g[best_var]);
  }
  std::sort(exps.begin(), exps.end());
  const std::uint32_t e = exps[(exps.size() - 1) / 2];
  const Monomial pivot = Monomial::variable(n, best_var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / g.gcd(pivot));

  HilbertPoly result = hp_numerator(std::move(with_pivot), n);
  hp_add_shifted(result, hp_numerator(std::move(colon), n), e);
  return result;
}

inline __int128 binom128(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < k) return 0;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/J.
inline HilbertPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t n) {
  auto p = detail::hp_numerator(gens, n);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Number of monomials of degree `degree` in n variables outside the ideal
/// generated by `gens`.
inline std::uint64_t count_standard_monomials(const std::vector<Monomial>& gens,
                                              std::size_t n, int degree) {
  if (degree < 0) return 0;
  const HilbertPoly num = hilbert_numerator(gens, n);
  __int128 total = 0;
  for (std::size_t j = 0; j < num.size() && static_cast<int>(j) <= degree; ++j) {
    total += num[j] * detail::binom128(degree - static_cast<std::int64_t>(j) + n - 1,
                                       static_cast<std::int64_t>(n) - 1);
  }
  if (total < 0 || total > static_cast<__int128>(INT64_MAX)) {
    throw LogicError("standard monomial count out of range");
  }
  return static_cast<std::uint64_t>(total);
}

/// All monomials of the given degree in n variables, in no particular order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.set(var, e);
      self(self, var + 1, left - e);
    }
    cur.set(var, 0);
  };
  rec(rec, 0, static_cast<std::uint32_t>(degree));
  return out;
}

/// Brute-force count by enumeration; used to cross-check the numerator path.
inline std::uint64_t count_standard_monomials_naive(const std::vector<Monomial>& gens,
                                                    std::size_t n, int degree) {
  std::uint64_t c = 0;
  for (const auto& m : monomials_of_degree(n, degree)) {
    bool inside = std::any_of(gens.begin(), gens.end(),
                              [&](const Monomial& g) { return g.divides(m); });
    c += !inside;
  }
  return c;
}

/// Krull dimension of S/J for a monomial ideal J: n minus the smallest set of
/// variables meeting the support of every generator. -1 if J = (1).
inline int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) return -1;
    supports.push_back(g.support());
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // Drop supports containing another support.
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto t : supports) {
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  int best = static_cast<int>(n);
  auto search = [&](auto&& self, std::uint32_t chosen, int size) -> void {
    if (size >= best) return;
    for (auto s : minimal) {
      if ((s & chosen) == 0) {
        for (std::uint32_t bits = s; bits; bits &= bits - 1) {
          self(self, chosen | (bits & (~bits + 1)), size + 1);
        }
        return;
      }
    }
    best = size;
  };
  search(search, 0u, 0);
  return static_cast<int>(n) - best;
}

}  // namespace lyu

#endif  // LYUBEZNIK_MONOMIAL_IDEAL_HPP_
