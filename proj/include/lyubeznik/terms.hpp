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

// Sparse vectors of terms c * m * e_comp. Polynomials are the comp == 0 case;
// elements of free modules use the component index. Everything that does
// arithmetic at the term level (the Groebner engine, reductions, products)
// goes through the kernels in this header.

#ifndef LYUBEZNIK_TERMS_HPP_
#define LYUBEZNIK_TERMS_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lyubeznik/field.hpp"
#include "lyubeznik/monomial.hpp"

namespace lyu {

struct Term {
  Monomial mono;
  std::uint32_t comp = 0;
  Coeff coef = 0;
};

/// Order on module terms. With `pot` the component decides first (lower index
/// is larger); otherwise terms are compared by twisted degree
/// deg(m) + twist[comp] first, then monomial, then component.
struct TermOrder {
  MonomialOrder mono = MonomialOrder::degrevlex;
  bool pot = true;
  std::span<const int> twists{};

  int twisted_degree(const Term& t) const {
    return static_cast<int>(t.mono.degree()) +
           (t.comp < twists.size() ? twists[t.comp] : 0);
  }

  std::strong_ordering operator()(const Term& a, const Term& b) const {
    if (pot) {
      if (a.comp != b.comp) {
        return a.comp < b.comp ? std::strong_ordering::greater
                               : std::strong_ordering::less;
      }
      return compare(a.mono, b.mono, mono);
    }
    const int da = twisted_degree(a);
    const int db = twisted_degree(b);
    if (da != db) return da <=> db;
    auto c = compare(a.mono, b.mono, mono);
    if (c != 0) return c;
    if (a.comp != b.comp) {
      return a.comp < b.comp ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
};

/// Terms sorted strictly descending, no zero coefficients.
using Vec = std::vector<Term>;

namespace vec {

inline void sort_and_combine(Vec& v, const PrimeField& k, const TermOrder& ord) {
  std::sort(v.begin(), v.end(),
            [&](const Term& a, const Term& b) { return ord(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(t);
    }
  }
  v.swap(out);
}

/// f[start:] <- f[start:] + c * m * g, leaving f[0:start) untouched. The
/// caller guarantees every term of c*m*g is smaller than f[start - 1].
inline void axpy_from(Vec& f, std::size_t start, Coeff c, const Monomial* m,
                      const Vec& g, const PrimeField& k, const TermOrder& ord) {
  if (c == 0 || g.empty()) return;
  thread_local Vec scratch;
  scratch.clear();
  scratch.reserve(f.size() - start + g.size());
  std::size_t i = start, j = 0;
  Term shifted;
  bool have = false;
  auto load = [&]() {
    if (j < g.size()) {
      shifted.mono = m ? g[j].mono * *m : g[j].mono;
      shifted.comp = g[j].comp;
      shifted.coef = k.mul(c, g[j].coef);
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < f.size() && have) {
    auto cmp = ord(f[i], shifted);
    if (cmp > 0) {
      scratch.push_back(f[i++]);
    } else if (cmp < 0) {
      scratch.push_back(shifted);
      ++j;
      load();
    } else {
      Coeff s = k.add(f[i].coef, shifted.coef);
      if (s != 0) {
        scratch.push_back(f[i]);
        scratch.back().coef = s;
      }
      ++i;
      ++j;
      load();
    }
  }
  while (i < f.size()) scratch.push_back(f[i++]);
  while (have) {
    scratch.push_back(shifted);
    ++j;
    load();
  }
  if (start == 0) {
    f.swap(scratch);
  } else {
    f.resize(start);
    f.insert(f.end(), scratch.begin(), scratch.end());
  }
}

/// f <- f + c * m * g (m may be null for the unit monomial).
inline void axpy(Vec& f, Coeff c, const Monomial* m, const Vec& g,
                 const PrimeField& k, const TermOrder& ord) {
  axpy_from(f, 0, c, m, g, k, ord);
}

inline void scale(Vec& f, Coeff c, const PrimeField& k) {
  if (c == 0) {
    f.clear();
    return;
  }
  for (auto& t : f) t.coef = k.mul(t.coef, c);
}

inline void make_monic(Vec& f, const PrimeField& k) {
  if (f.empty() || f.front().coef == 1) return;
  scale(f, k.inv(f.front().coef), k);
}

/// c * m * g as a fresh vector (order preserved since orders are monomial).
inline Vec times(Coeff c, const Monomial& m, const Vec& g, const PrimeField& k) {
  Vec r;
  if (c == 0) return r;
  r.reserve(g.size());
  for (const auto& t : g) r.push_back(Term{t.mono * m, t.comp, k.mul(c, t.coef)});
  return r;
}

inline Vec add(const Vec& a, const Vec& b, const PrimeField& k, const TermOrder& ord) {
  Vec r = a;
  axpy(r, 1, nullptr, b, k, ord);
  return r;
}

inline Vec sub(const Vec& a, const Vec& b, const PrimeField& k, const TermOrder& ord) {
  Vec r = a;
  axpy(r, k.neg(1), nullptr, b, k, ord);
  return r;
}

inline bool is_homogeneous(const Vec& f, std::span<const int> twists) {
  if (f.empty()) return true;
  auto deg = [&](const Term& t) {
    return static_cast<int>(t.mono.degree()) +
           (t.comp < twists.size() ? twists[t.comp] : 0);
  };
  const int d = deg(f.front());
  return std::all_of(f.begin(), f.end(), [&](const Term& t) { return deg(t) == d; });
}

inline int degree_of(const Term& t, std::span<const int> twists) {
  return static_cast<int>(t.mono.degree()) +
         (t.comp < twists.size() ? twists[t.comp] : 0);
}

/// Largest twisted degree of any term (the "sugar" of an input vector).
inline int top_degree(const Vec& f, std::span<const int> twists) {
  int d = 0;
  bool first = true;
  for (const auto& t : f) {
    int e = degree_of(t, twists);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

inline bool equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].comp != b[i].comp || a[i].coef != b[i].coef || !(a[i].mono == b[i].mono)) {
      return false;
    }
  }
  return true;
}

}  // namespace vec
}  // namespace lyu

#endif  // LYUBEZNIK_TERMS_HPP_
