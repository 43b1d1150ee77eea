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

// Graded free modules, homogeneous maps between them and finitely presented
// graded modules.
//
// Twist convention: FreeModule{a_1, ..., a_r} is the direct sum of S(-a_i),
// so generator i sits in degree a_i. The dual module has twists -a_i. A map
// is stored by the images of the source generators (columns), each a sparse
// vector in the target whose terms carry the row index in Term::comp. Column
// j must be homogeneous of degree a_j of the source.

#ifndef LYUBEZNIK_MODULE_HPP_
#define LYUBEZNIK_MODULE_HPP_

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lyubeznik/engine.hpp"
#include "lyubeznik/errors.hpp"
#include "lyubeznik/groebner.hpp"
#include "lyubeznik/monomial_ideal.hpp"
#include "lyubeznik/polynomial.hpp"

namespace lyu {

class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> twists)
      : ring_(std::move(ring)), twists_(std::move(twists)) {}
  static FreeModule untwisted(RingPtr ring, std::size_t rank) {
    return FreeModule(std::move(ring), std::vector<int>(rank, 0));
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return twists_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(std::size_t i) const { return twists_.at(i); }

  FreeModule dual() const {
    std::vector<int> t(twists_.size());
    std::transform(twists_.begin(), twists_.end(), t.begin(), [](int a) { return -a; });
    return FreeModule(ring_, std::move(t));
  }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_ring(a.ring_, b.ring_) && a.twists_ == b.twists_;
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
};

/// An element of a free module, kept as a canonical sparse vector.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(Vec terms) : terms_(std::move(terms)) {}

  static ModuleElement from_entries(const std::vector<Polynomial>& entries) {
    Vec v;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (auto t : entries[i].terms()) {
        t.comp = static_cast<std::uint32_t>(i);
        v.push_back(t);
      }
    }
    // Entries are already sorted and POT puts lower components first.
    return ModuleElement(std::move(v));
  }
  static ModuleElement basis_vector(const RingPtr& ring, std::size_t i) {
    return ModuleElement(Vec{Term{Monomial(ring->nvars()), static_cast<std::uint32_t>(i), 1}});
  }

  const Vec& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial entry(const RingPtr& ring, std::size_t i) const {
    Vec v;
    for (const auto& t : terms_) {
      if (t.comp == i) v.push_back(t);
    }
    return Polynomial::from_sorted(ring, std::move(v));
  }
  std::vector<Polynomial> entries(const RingPtr& ring, std::size_t rank) const {
    std::vector<Vec> by(rank);
    for (const auto& t : terms_) by.at(t.comp).push_back(t);
    std::vector<Polynomial> out;
    for (auto& v : by) out.push_back(Polynomial::from_sorted(ring, std::move(v)));
    return out;
  }

 private:
  Vec terms_;
};

/// Homogeneous map source -> target given by the images of source generators.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(FreeModule target, FreeModule source, std::vector<Vec> columns)
      : target_(std::move(target)), source_(std::move(source)), cols_(std::move(columns)) {
    validate();
  }

  /// Builds a matrix from its rows of polynomial entries.
  static GradedMatrix from_rows(FreeModule target, FreeModule source,
                                const std::vector<std::vector<Polynomial>>& rows) {
    if (rows.size() != target.rank()) throw InvalidArgument("row count does not match target");
    std::vector<Vec> cols(source.rank());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != source.rank()) throw InvalidArgument("ragged matrix rows");
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        for (auto t : rows[r][c].terms()) {
          t.comp = static_cast<std::uint32_t>(r);
          cols[c].push_back(t);
        }
      }
    }
    return GradedMatrix(std::move(target), std::move(source), std::move(cols));
  }

  /// A 1 x m matrix S(-d_1) + ... + S(-d_m) -> S whose columns are the given
  /// homogeneous polynomials.
  static GradedMatrix row(const RingPtr& ring, const std::vector<Polynomial>& polys) {
    std::vector<int> tw;
    std::vector<Vec> cols;
    for (const auto& f : polys) {
      if (!f.is_homogeneous()) throw InvalidArgument("expected homogeneous polynomials");
      tw.push_back(std::max(f.degree(), 0));
      cols.push_back(f.terms());
    }
    return GradedMatrix(FreeModule::untwisted(ring, 1), FreeModule(ring, std::move(tw)),
                        std::move(cols));
  }

  static GradedMatrix identity(const FreeModule& f) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < f.rank(); ++i) {
      cols.push_back(ModuleElement::basis_vector(f.ring(), i).terms());
    }
    return GradedMatrix(f, f, std::move(cols));
  }

  static GradedMatrix zero(const FreeModule& target, const FreeModule& source) {
    return GradedMatrix(target, source, std::vector<Vec>(source.rank()));
  }

  const FreeModule& target() const { return target_; }
  const FreeModule& source() const { return source_; }
  const RingPtr& ring() const { return target_.ring(); }
  std::size_t nrows() const { return target_.rank(); }
  std::size_t ncols() const { return source_.rank(); }
  const std::vector<Vec>& columns() const { return cols_; }
  const Vec& column(std::size_t j) const { return cols_.at(j); }

  Polynomial entry(std::size_t r, std::size_t c) const {
    return ModuleElement(cols_.at(c)).entry(ring(), r);
  }

  bool is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const Vec& v) { return v.empty(); });
  }

  /// Image of an element of the source.
  Vec apply(const Vec& x) const {
    const auto& k = ring()->field();
    const auto ord = ring()->term_order();
    Vec out;
    for (const auto& t : x) vec::axpy(out, t.coef, &t.mono, cols_.at(t.comp), k, ord);
    return out;
  }

  /// The dual map target^* -> source^*.
  GradedMatrix transpose() const {
    std::vector<Vec> cols(nrows());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      for (const auto& t : cols_[c]) {
        cols[t.comp].push_back(Term{t.mono, static_cast<std::uint32_t>(c), t.coef});
      }
    }
    const auto& k = ring()->field();
    const auto ord = ring()->term_order();
    for (auto& v : cols) vec::sort_and_combine(v, k, ord);
    return GradedMatrix(source_.dual(), target_.dual(), std::move(cols));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < nrows(); ++r) {
      s += "[";
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (c) s += ", ";
        s += entry(r, c).to_string();
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void validate() const {
    if (!same_ring(target_.ring(), source_.ring())) throw RingMismatch();
    if (cols_.size() != source_.rank()) throw InvalidArgument("column count does not match source");
    const std::size_t n = target_.ring() ? target_.ring()->nvars() : 0;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& t : cols_[j]) {
        if (t.comp >= target_.rank()) throw InvalidArgument("matrix entry outside the target");
        if (t.mono.size() != n) throw InvalidArgument("monomial length does not match the ring");
        if (vec::degree_of(t, target_.twists()) != source_.twist(j)) {
          throw InvalidArgument("column " + std::to_string(j) +
                                " is not homogeneous of its source degree " +
                                std::to_string(source_.twist(j)));
        }
      }
    }
  }

  FreeModule target_;
  FreeModule source_;
  std::vector<Vec> cols_;
};

/// a ∘ b.
inline GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.source() == b.target())) throw InvalidArgument("composition of incompatible maps");
  std::vector<Vec> cols;
  cols.reserve(b.ncols());
  for (const auto& c : b.columns()) cols.push_back(a.apply(c));
  return GradedMatrix(a.target(), b.source(), std::move(cols));
}

/// Block matrix [a | b] with a common target.
inline GradedMatrix concat_columns(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.target() == b.target())) throw InvalidArgument("concatenation needs a common target");
  std::vector<int> tw = a.source().twists();
  tw.insert(tw.end(), b.source().twists().begin(), b.source().twists().end());
  std::vector<Vec> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return GradedMatrix(a.target(), FreeModule(a.ring(), std::move(tw)), std::move(cols));
}

/// Reduced Groebner basis of a graded submodule, position over term.
class ModuleGB {
 public:
  ModuleGB(FreeModule ambient, std::vector<Vec> elements)
      : ambient_(std::move(ambient)), elements_(std::move(elements)) {}

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<Vec>& elements() const { return elements_; }

  Vec normal_form(Vec f) const {
    const auto& k = ambient_.ring()->field();
    const auto ord = ambient_.ring()->term_order();
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term& t = f[pos];
      const Vec* red = nullptr;
      for (const auto& g : elements_) {
        if (g.front().comp == t.comp && g.front().mono.divides(t.mono)) {
          red = &g;
          break;
        }
      }
      if (!red) {
        ++pos;
        continue;
      }
      const Monomial m = t.mono / red->front().mono;
      const Coeff c = k.neg(k.mul(t.coef, k.inv(red->front().coef)));
      vec::axpy_from(f, pos, c, &m, *red, k, ord);
    }
    return f;
  }

  bool contains(const Vec& f) const { return normal_form(f).empty(); }

  /// Leading monomials grouped by component.
  std::vector<std::vector<Monomial>> leading_by_component() const {
    std::vector<std::vector<Monomial>> out(ambient_.rank());
    for (const auto& g : elements_) out.at(g.front().comp).push_back(g.front().mono);
    return out;
  }

 private:
  FreeModule ambient_;
  std::vector<Vec> elements_;
};

namespace detail {

inline EngineOptions module_options(const FreeModule& f) {
  EngineOptions opts;
  opts.mono = f.ring()->order();
  opts.pot = true;
  opts.twists = f.twists();
  return opts;
}

}  // namespace detail

inline ModuleGB module_buchberger(const std::vector<Vec>& gens, const FreeModule& f) {
  GroebnerEngine engine(f.ring()->field(), detail::module_options(f));
  for (const auto& g : gens) {
    for (const auto& t : g) {
      if (t.comp >= f.rank()) throw InvalidArgument("generator outside the ambient module");
    }
    if (!g.empty()) engine.add_input(g);
  }
  engine.run();
  return ModuleGB(f, engine.reduced_basis());
}

/// Exhaustive closure check for a module Groebner basis.
inline bool verify_module_groebner(const ModuleGB& gb) {
  const auto& k = gb.ambient().ring()->field();
  const auto ord = gb.ambient().ring()->term_order();
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].front().comp != el[j].front().comp) continue;
      const Monomial l = el[i].front().mono.lcm(el[j].front().mono);
      Vec s = vec::times(k.inv(el[i].front().coef), l / el[i].front().mono, el[i], k);
      const Monomial mj = l / el[j].front().mono;
      vec::axpy(s, k.neg(k.inv(el[j].front().coef)), &mj, el[j], k, ord);
      if (!gb.contains(s)) return false;
    }
  }
  return true;
}

/// Indices of a minimal generating subset of homogeneous vectors in f. Inputs
/// are considered in order of degree, ties by index.
inline std::vector<std::size_t> minimal_generators(const std::vector<Vec>& gens,
                                                   const FreeModule& f) {
  GroebnerEngine engine(f.ring()->field(), detail::module_options(f));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].empty()) continue;
    if (!vec::is_homogeneous(gens[i], f.twists())) {
      throw InvalidArgument("minimal generators need homogeneous input");
    }
    idx.push_back(i);
    engine.add_input(gens[i]);
  }
  engine.run();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (engine.minimal_inputs()[k]) out.push_back(idx[k]);
  }
  return out;
}

/// Kernel of m as a map into its source. With `minimal` the columns are a
/// minimal generating set; otherwise all Schreyer syzygies found are kept.
/// A degree bound limits the syzygies to degrees <= bound (a truncation).
inline GradedMatrix syzygies(const GradedMatrix& m, bool minimal = true,
                             std::optional<int> degree_bound = std::nullopt) {
  EngineOptions opts = detail::module_options(m.target());
  opts.rep_twists = m.source().twists();
  opts.track = true;
  opts.degree_bound = degree_bound;
  GroebnerEngine engine(m.ring()->field(), opts);
  for (std::size_t j = 0; j < m.ncols(); ++j) {
    engine.add_input(m.column(j), ModuleElement::basis_vector(m.ring(), j).terms());
  }
  engine.run();
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (const auto& s : engine.syzygies()) {
    if (degree_bound && s.degree > *degree_bound) continue;
    cols.push_back(s.rep);
    degs.push_back(s.degree);
  }
  if (minimal && !cols.empty()) {
    std::vector<std::size_t> keep = minimal_generators(cols, m.source());
    std::vector<Vec> kc;
    std::vector<int> kd;
    for (auto i : keep) {
      kc.push_back(std::move(cols[i]));
      kd.push_back(degs[i]);
    }
    cols.swap(kc);
    degs.swap(kd);
  }
  // Stable degree order keeps output deterministic and readable.
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
  std::vector<Vec> sc;
  std::vector<int> sd;
  for (auto i : perm) {
    sc.push_back(std::move(cols[i]));
    sd.push_back(degs[i]);
  }
  return GradedMatrix(m.source(), FreeModule(m.ring(), std::move(sd)), std::move(sc));
}

/// {u in source(a) : a u in image(b)}, as a map into source(a). This one
/// primitive gives colon ideals, intersections, annihilators and subquotient
/// presentations while staying inside homogeneous computations.
inline GradedMatrix modulo(const GradedMatrix& a, const GradedMatrix& b,
                           std::optional<int> degree_bound = std::nullopt) {
  const GradedMatrix both = concat_columns(a, b);
  const GradedMatrix syz = syzygies(both, false, degree_bound);
  const std::uint32_t na = static_cast<std::uint32_t>(a.ncols());
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < syz.ncols(); ++j) {
    Vec v;
    for (const auto& t : syz.column(j)) {
      if (t.comp < na) v.push_back(t);
    }
    if (v.empty()) continue;
    cols.push_back(std::move(v));
    degs.push_back(syz.source().twist(j));
  }
  std::vector<Vec> kc;
  std::vector<int> kd;
  for (auto i : minimal_generators(cols, a.source())) {
    kc.push_back(std::move(cols[i]));
    kd.push_back(degs[i]);
  }
  return GradedMatrix(a.source(), FreeModule(a.ring(), std::move(kd)), std::move(kc));
}

/// coker of a graded matrix, with a lazily computed Groebner basis of the
/// relation module.
class PresentedModule {
 public:
  explicit PresentedModule(GradedMatrix presentation)
      : pres_(std::move(presentation)), cache_(std::make_shared<Cache>()) {}

  static PresentedModule free(const FreeModule& f) {
    return PresentedModule(GradedMatrix::zero(f, FreeModule(f.ring(), {})));
  }
  static PresentedModule zero(const RingPtr& ring) { return free(FreeModule(ring, {})); }
  /// S/I with its generator in degree 0.
  static PresentedModule quotient(const Ideal& i) {
    if (!i.is_homogeneous()) throw InvalidArgument("graded modules need a homogeneous ideal");
    return PresentedModule(GradedMatrix::row(i.ring(), i.generators()));
  }

  const GradedMatrix& presentation() const { return pres_; }
  const RingPtr& ring() const { return pres_.ring(); }
  std::size_t rank() const { return pres_.nrows(); }
  const std::vector<int>& generator_degrees() const { return pres_.target().twists(); }

  const ModuleGB& relation_basis() const {
    std::call_once(cache_->once, [&] {
      cache_->gb = std::make_shared<const ModuleGB>(
          module_buchberger(pres_.columns(), pres_.target()));
    });
    return *cache_->gb;
  }

  bool is_zero() const {
    if (rank() == 0) return true;
    std::vector<bool> unit(rank(), false);
    for (const auto& g : relation_basis().elements()) {
      if (g.front().mono.is_one()) unit[g.front().comp] = true;
    }
    return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
  }

  /// dim_k of the degree-d piece: standard monomials of the relation module.
  std::uint64_t graded_piece_dim(int d) const {
    if (rank() == 0) return 0;
    const auto lead = relation_basis().leading_by_component();
    const std::size_t n = ring()->nvars();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      total += count_standard_monomials(lead[i], n, d - generator_degrees()[i]);
    }
    return total;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const ModuleGB> gb;
  };
  GradedMatrix pres_;
  std::shared_ptr<Cache> cache_;
};

inline std::uint64_t graded_piece_dim(const PresentedModule& m, int d) {
  return m.graded_piece_dim(d);
}

/// Smaller presentation of the same module: cancels unit entries (generator
/// and relation disappear together) and drops zero relations.
inline PresentedModule prune(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const auto& k = ring->field();
  const auto ord = ring->term_order();
  std::vector<int> tgt = m.presentation().target().twists();
  std::vector<int> src = m.presentation().source().twists();
  std::vector<Vec> cols = m.presentation().columns();
  while (true) {
    // Pick the sparsest column holding a unit entry.
    std::optional<std::size_t> pc;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& t : cols[c]) {
        if (t.mono.is_one() && (!pc || cols[c].size() < cols[*pc].size())) {
          pc = c;
          prow = t.comp;
          break;
        }
      }
    }
    if (!pc) break;
    const Vec pivot = cols[*pc];
    Coeff u = 0;
    for (const auto& t : pivot) {
      if (t.comp == prow) u = t.coef;
    }
    const Coeff minus_inv = k.neg(k.inv(u));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == *pc) continue;
      Vec entry;
      for (const auto& t : cols[c]) {
        if (t.comp == prow) entry.push_back(t);
      }
      for (const auto& t : entry) {
        vec::axpy(cols[c], k.mul(minus_inv, t.coef), &t.mono, pivot, k, ord);
      }
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(*pc));
    src.erase(src.begin() + static_cast<std::ptrdiff_t>(*pc));
    tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(prow));
    for (auto& col : cols) {
      for (auto& t : col) {
        LYU_ASSERT(t.comp != prow, "unit elimination left an entry in the cancelled row");
        if (t.comp > prow) --t.comp;
      }
    }
  }
  std::vector<Vec> kc;
  std::vector<int> ks;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].empty()) continue;
    kc.push_back(std::move(cols[c]));
    ks.push_back(src[c]);
  }
  FreeModule target(ring, std::move(tgt));
  if (!kc.empty()) {
    // Drop redundant relations as well.
    std::vector<Vec> mc;
    std::vector<int> ms;
    for (auto i : minimal_generators(kc, target)) {
      mc.push_back(std::move(kc[i]));
      ms.push_back(ks[i]);
    }
    kc.swap(mc);
    ks.swap(ms);
  }
  return PresentedModule(GradedMatrix(target, FreeModule(ring, std::move(ks)), std::move(kc)));
}

/// <k_gens> / <im_gens> inside f, presented on the generators k_gens. Throws
/// LogicError if some im_gens element is not in <k_gens>.
inline PresentedModule subquotient_presentation(const GradedMatrix& kernel,
                                                const GradedMatrix& image,
                                                bool check_containment = true) {
  if (!(kernel.target() == image.target())) {
    throw InvalidArgument("subquotient pieces must live in the same free module");
  }
  if (check_containment && image.ncols() > 0) {
    const ModuleGB gb = module_buchberger(kernel.columns(), kernel.target());
    for (const auto& c : image.columns()) {
      if (!gb.contains(c)) {
        throw LogicError("subquotient: image is not contained in the kernel");
      }
    }
  }
  return PresentedModule(modulo(kernel, image));
}

inline PresentedModule subquotient_presentation(const std::vector<Vec>& k_gens,
                                                const std::vector<Vec>& im_gens,
                                                const FreeModule& f) {
  auto degrees = [&](const std::vector<Vec>& gens) {
    std::vector<int> d;
    for (const auto& g : gens) {
      if (g.empty()) throw InvalidArgument("zero generator in a subquotient");
      d.push_back(vec::degree_of(g.front(), f.twists()));
    }
    return FreeModule(f.ring(), std::move(d));
  };
  std::vector<Vec> im;
  for (const auto& g : im_gens) {
    if (!g.empty()) im.push_back(g);
  }
  return subquotient_presentation(GradedMatrix(f, degrees(k_gens), k_gens),
                                  GradedMatrix(f, degrees(im), im));
}

}  // namespace lyu

#endif  // LYUBEZNIK_MODULE_HPP_
