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

// Combinatorial side: simplicial complexes and their Stanley-Reisner ideals,
// reduced cohomology over F_p, graphs and binomial edge ideals, plus a
// degree-strand recomputation of the double Ext number.
//
// The strand computation shares the resolutions with the main path. What it
// replaces is the last step: instead of presenting Ext as a subquotient and
// counting standard monomials, it writes the degree-0 strand of the dual
// complex as explicit matrices and takes ranks.

#ifndef LYUBEZNIK_SR_ORACLE_HPP_
#define LYUBEZNIK_SR_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/groebner.hpp"
#include "lyubeznik/linalg.hpp"
#include "lyubeznik/resolution.hpp"

namespace lyu {

/// Vertex sets are bitmasks over vertices 1..v (bit k-1 for vertex k).
using FaceMask = std::uint32_t;

class SimplicialComplex {
 public:
  /// Facets list vertices 1..v. Faces contained in others are dropped.
  SimplicialComplex(std::size_t vertices, const std::vector<std::vector<std::size_t>>& facets)
      : v_(vertices) {
    if (vertices == 0 || vertices > kMaxVars) {
      throw InvalidArgument("a complex needs between 1 and " + std::to_string(kMaxVars) +
                            " vertices");
    }
    std::vector<FaceMask> masks;
    for (const auto& f : facets) {
      FaceMask m = 0;
      for (auto x : f) {
        if (x < 1 || x > vertices) {
          throw InvalidArgument("vertex " + std::to_string(x) + " out of range 1.." +
                                std::to_string(vertices));
        }
        m |= FaceMask{1} << (x - 1);
      }
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (auto m : masks) {
      bool contained = false;
      for (auto o : masks) {
        if (o != m && (m & o) == m) contained = true;
      }
      if (!contained) facets_.push_back(m);
    }
    for (auto f : facets_) {
      for (FaceMask sub = f;; sub = (sub - 1) & f) {
        faces_.insert(sub);
        if (sub == 0) break;
      }
    }
  }

  std::size_t vertex_count() const { return v_; }
  const std::vector<FaceMask>& facets() const { return facets_; }
  bool is_face(FaceMask m) const { return faces_.count(m) > 0; }

  /// dim of the complex: largest facet size minus one.
  int dimension() const {
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  /// Faces of dimension k (k + 1 vertices), sorted.
  std::vector<FaceMask> faces(int k) const {
    std::vector<FaceMask> out;
    for (auto f : faces_) {
      if (std::popcount(f) == k + 1) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Vertices that lie in some facet.
  FaceMask used_vertices() const {
    FaceMask m = 0;
    for (auto f : facets_) m |= f;
    return m;
  }

  std::vector<FaceMask> minimal_nonfaces() const {
    std::set<FaceMask> out;
    for (auto f : faces_) {
      for (std::size_t x = 0; x < v_; ++x) {
        const FaceMask bit = FaceMask{1} << x;
        if (f & bit) continue;
        const FaceMask g = f | bit;
        if (is_face(g)) continue;
        bool minimal = true;
        for (FaceMask rest = g; rest; rest &= rest - 1) {
          if (!is_face(g & ~(rest & (~rest + 1)))) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.insert(g);
      }
    }
    return {out.begin(), out.end()};
  }

  /// Alternating face count sum_{k >= -1} (-1)^k f_k.
  long reduced_euler_characteristic() const {
    long chi = 0;
    for (auto f : faces_) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
    return chi;
  }

 private:
  std::size_t v_;
  std::vector<FaceMask> facets_;
  std::unordered_set<FaceMask> faces_;
};

class Graph {
 public:
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
      : v_(vertices) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || a > vertices || b > vertices) {
        throw InvalidArgument("edge endpoint out of range");
      }
      if (a == b) throw InvalidArgument("graphs must not have loops");
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) throw InvalidArgument("repeated edge");
      edges_.emplace_back(a, b);
    }
  }

  static Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    return Graph(n, e);
  }
  static Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i <= a; ++i) {
      for (std::size_t j = 1; j <= b; ++j) e.emplace_back(i, a + j);
    }
    return Graph(a + b, e);
  }

  std::size_t vertex_count() const { return v_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t v_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Ideal of minimal nonfaces in the given ring, whose variables are the
/// vertices in order.
inline Ideal stanley_reisner_ideal(const SimplicialComplex& c, const RingPtr& ring) {
  if (ring->nvars() != c.vertex_count()) {
    throw InvalidArgument("ring needs one variable per vertex");
  }
  std::vector<Polynomial> gens;
  for (auto m : c.minimal_nonfaces()) {
    Monomial mono(ring->nvars());
    for (std::size_t x = 0; x < ring->nvars(); ++x) {
      if (m & (FaceMask{1} << x)) mono.set(x, 1);
    }
    gens.push_back(Polynomial::monomial(ring, 1, mono));
  }
  return Ideal(ring, std::move(gens));
}

inline Ideal stanley_reisner_ideal(const SimplicialComplex& c, std::uint32_t p) {
  return stanley_reisner_ideal(c, PolyRing::make(p, PolyRing::indexed_names("x", c.vertex_count())));
}

/// Ring F_p[x_1..x_v, y_1..y_v] for binomial edge ideals.
inline RingPtr binomial_edge_ring(std::size_t v, std::uint32_t p) {
  auto names = PolyRing::indexed_names("x", v);
  auto ys = PolyRing::indexed_names("y", v);
  names.insert(names.end(), ys.begin(), ys.end());
  return PolyRing::make(p, std::move(names));
}

/// (x_i y_j - x_j y_i : {i, j} an edge, i < j).
inline Ideal binomial_edge_ideal(const Graph& g, const RingPtr& ring) {
  const std::size_t v = g.vertex_count();
  if (ring->nvars() != 2 * v) throw InvalidArgument("ring needs variables x_1..x_v, y_1..y_v");
  std::vector<Polynomial> gens;
  for (auto [i, j] : g.edges()) {
    auto x = [&](std::size_t k) { return Polynomial::variable(ring, k - 1); };
    auto y = [&](std::size_t k) { return Polynomial::variable(ring, v + k - 1); };
    gens.push_back(x(i) * y(j) - x(j) * y(i));
  }
  return Ideal(ring, std::move(gens));
}

inline Ideal binomial_edge_ideal(const Graph& g, std::uint32_t p) {
  return binomial_edge_ideal(g, binomial_edge_ring(g.vertex_count(), p));
}

namespace detail {

/// Coboundary C^k -> C^{k+1} of the simplicial cochain complex as rows (one
/// per k-face, the coboundary of its dual basis element), rank over F_p.
inline std::size_t coboundary_rank(const SimplicialComplex& c, int k, const PrimeField& field) {
  const auto lower = c.faces(k);
  const auto upper = c.faces(k + 1);
  if (lower.empty() || upper.empty()) return 0;
  std::unordered_map<FaceMask, std::uint32_t> index;
  for (std::size_t i = 0; i < upper.size(); ++i) index[upper[i]] = static_cast<std::uint32_t>(i);
  RowEchelon e(field);
  for (auto f : lower) {
    SparseRow row;
    for (std::size_t x = 0; x < c.vertex_count(); ++x) {
      const FaceMask bit = FaceMask{1} << x;
      if (f & bit) continue;
      auto it = index.find(f | bit);
      if (it == index.end()) continue;
      // Sign (-1)^{position of x in the bigger face}.
      const int pos = std::popcount(f & (bit - 1));
      row.emplace_back(it->second, pos % 2 ? field.neg(1) : 1);
    }
    std::sort(row.begin(), row.end());
    e.add(std::move(row));
  }
  return e.rank();
}

}  // namespace detail

/// dim_k reduced cohomology H~^k(c; F_p) for k = -1..dim c (index k + 1).
inline std::vector<std::size_t> reduced_cohomology_dims(const SimplicialComplex& c,
                                                        std::uint32_t p) {
  const PrimeField field(p);
  const int dim = c.dimension();
  std::vector<std::size_t> out;
  for (int k = -1; k <= dim; ++k) {
    const std::size_t fk = c.faces(k).size();
    const std::size_t rk = detail::coboundary_rank(c, k, field);
    const std::size_t rprev = k >= 0 ? detail::coboundary_rank(c, k - 1, field) : 0;
    out.push_back(fk - rk - rprev);
  }
  return out;
}

inline std::size_t reduced_cohomology_dim(const SimplicialComplex& c, int k, std::uint32_t p) {
  if (k < -1 || k > c.dimension()) return 0;
  return reduced_cohomology_dims(c, p)[static_cast<std::size_t>(k + 1)];
}

/// Components of the complex (vertices in no facet are not part of it).
inline std::size_t connected_components(const SimplicialComplex& c) {
  const std::size_t v = c.vertex_count();
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto f : c.facets()) {
    const int first = std::countr_zero(f);
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      parent[find(static_cast<std::size_t>(std::countr_zero(rest)))] =
          find(static_cast<std::size_t>(first));
    }
  }
  std::size_t count = 0;
  const FaceMask used = c.used_vertices();
  for (std::size_t x = 0; x < v; ++x) {
    if ((used & (FaceMask{1} << x)) && find(x) == x) ++count;
  }
  return count;
}

/// dim H^i_m(S/I_c)_0 = dim H~^{i-1}(c; F_p).
inline std::size_t hochster_degree_zero(const SimplicialComplex& c, int i, std::uint32_t p) {
  return reduced_cohomology_dim(c, i - 1, p);
}

/// Degree-0 cohomology of the dual of a resolution, by explicit strands:
/// C^k = Hom(F_k, S)_0, the differential is d_{k+1}^T in degree 0.
inline std::size_t dual_strand_cohomology(const FreeResolution& res, std::size_t k) {
  const std::size_t n = res.ring()->nvars();
  const auto& field = res.ring()->field();
  auto rank_of = [&](std::size_t idx) -> std::size_t {
    // rank of d_{idx+1}^T : F_idx^* -> F_{idx+1}^* in degree 0.
    const GradedMatrix t = res.differential(idx + 1).transpose();
    return strand_rank(t.columns(), t.source().twists(), t.target().twists(), n, 0, field);
  };
  const std::size_t dim_ck = StrandBasis(n, res.free_module(k).dual().twists(), 0).size();
  const std::size_t out_rank = rank_of(k);
  const std::size_t in_rank = k > 0 ? rank_of(k - 1) : 0;
  return dim_ck - out_rank - in_rank;
}

/// Strand recomputation of dim Ext^{n-i}(Ext^{n-j}(S/I, S), S)_0.
inline std::size_t strand_double_ext(const DoubleExt& de, std::size_t i, std::size_t j) {
  if (de.inner(j).rank() == 0) return 0;
  return dual_strand_cohomology(de.inner_resolution(j), de.nvars() - i);
}

inline std::size_t strand_double_ext(const Ideal& ideal, std::size_t i, std::size_t j) {
  return strand_double_ext(DoubleExt(ideal), i, j);
}

}  // namespace lyu

#endif  // LYUBEZNIK_SR_ORACLE_HPP_
