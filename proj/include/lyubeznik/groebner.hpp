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

#ifndef LYUBEZNIK_GROEBNER_HPP_
#define LYUBEZNIK_GROEBNER_HPP_

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "lyubeznik/engine.hpp"
#include "lyubeznik/errors.hpp"
#include "lyubeznik/monomial_ideal.hpp"
#include "lyubeznik/polynomial.hpp"

namespace lyu {

/// A reduced Groebner basis: monic elements sorted by increasing leading
/// monomial, no leading monomial divides another, tails fully reduced.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  MonomialOrder order() const { return ring_->order(); }

  bool is_unit() const {
    return elements_.size() == 1 && elements_[0].leading_term().mono.is_one();
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g.leading_term().mono);
    return out;
  }

  /// Remainder of f on division by the basis: no term of the result is
  /// divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
    const auto& k = ring_->field();
    const auto ord = ring_->term_order();
    Vec v = f.terms();
    std::size_t pos = 0;
    while (pos < v.size()) {
      const Term& t = v[pos];
      const Polynomial* red = nullptr;
      for (const auto& g : elements_) {
        if (g.leading_term().mono.divides(t.mono)) {
          red = &g;
          break;
        }
      }
      if (!red) {
        ++pos;
        continue;
      }
      const Monomial m = t.mono / red->leading_term().mono;
      const Coeff c = k.neg(k.mul(t.coef, k.inv(red->leading_term().coef)));
      vec::axpy_from(v, pos, c, &m, red->terms(), k, ord);
    }
    return Polynomial::from_sorted(ring_, std::move(v));
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

inline std::vector<Polynomial> polys_from_vecs(const RingPtr& ring, std::vector<Vec> vs) {
  std::vector<Polynomial> out;
  out.reserve(vs.size());
  for (auto& v : vs) out.push_back(Polynomial::from_sorted(ring, std::move(v)));
  return out;
}

/// Reduced Groebner basis of the ideal generated by `gens`.
inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  EngineOptions opts;
  opts.mono = ring->order();
  opts.product_criterion = true;
  GroebnerEngine engine(ring->field(), opts);
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_zero()) engine.add_input(g.terms());
  }
  engine.run();
  return GroebnerBasis(ring, polys_from_vecs(ring, engine.reduced_basis()));
}

/// Ideal of a polynomial ring: generators plus a lazily computed reduced
/// Groebner basis shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    homogeneous_ = std::all_of(gens_.begin(), gens_.end(),
                               [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
  }
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
    return Ideal(std::move(ring), std::move(v));
  }
  static Ideal parse(RingPtr ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> v;
    for (const auto& t : texts) v.push_back(Polynomial::parse(ring, t));
    return Ideal(std::move(ring), std::move(v));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }

  const GroebnerBasis& groebner_basis() const {
    std::call_once(cache_->once, [&] {
      cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_));
    });
    return *cache_->gb;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return groebner_basis().is_unit(); }

  bool contains(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
    return groebner_basis().normal_form(f).is_zero();
  }
  bool contains(const Ideal& other) const {
    if (!same_ring(other.ring_, ring_)) throw RingMismatch();
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Polynomial& g) { return contains(g); });
  }

  /// Ideal equality (membership both ways).
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return g.normal_form(f);
}

inline bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

/// Exhaustive confluence check: every S-polynomial of the basis reduces to 0.
inline bool verify_groebner(const GroebnerBasis& gb) {
  const auto& k = gb.ring()->field();
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const Monomial& a = el[i].leading_term().mono;
      const Monomial& b = el[j].leading_term().mono;
      const Monomial l = a.lcm(b);
      Polynomial s = el[i].times_monomial(l / a).scaled(k.inv(el[i].leading_term().coef)) -
                     el[j].times_monomial(l / b).scaled(k.inv(el[j].leading_term().coef));
      if (!gb.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

namespace detail {

/// Homogeneous case: the inputs that survive as minimal generators. Otherwise
/// the reduced Groebner basis.
inline std::vector<Polynomial> interreduce(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> nz;
  for (auto& g : gens) {
    if (!g.is_zero()) nz.push_back(std::move(g));
  }
  const bool homogeneous = std::all_of(nz.begin(), nz.end(),
                                       [](const Polynomial& g) { return g.is_homogeneous(); });
  if (!homogeneous) return buchberger(ring, nz).elements();
  EngineOptions opts;
  opts.mono = ring->order();
  opts.product_criterion = true;
  GroebnerEngine engine(ring->field(), opts);
  for (const auto& g : nz) engine.add_input(g.terms());
  engine.run();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nz.size(); ++i) {
    if (engine.minimal_inputs()[i]) out.push_back(nz[i]);
  }
  return out;
}

}  // namespace detail

inline void check_same_ring(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), detail::interreduce(I.ring(), std::move(g)));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::vector<Polynomial> g;
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) g.push_back(a * b);
  }
  return Ideal(I.ring(), detail::interreduce(I.ring(), std::move(g)));
}

/// I^{[p^e]}: generated by the p^e-th powers of the given generators.
inline Ideal frobenius_power(const Ideal& I, unsigned e) {
  std::vector<Polynomial> g;
  g.reserve(I.generators().size());
  for (const auto& f : I.generators()) g.push_back(f.frobenius_pow(e));
  return Ideal(I.ring(), std::move(g));
}

/// m^{[q]} = (x_1^q, ..., x_n^q).
inline Ideal maximal_frobenius_power(const RingPtr& ring, std::uint64_t q) {
  if (q > kMaxExponent) throw ExponentOverflow("p^e exceeds the bound 2^20");
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    g.push_back(Polynomial::monomial(
        ring, 1, Monomial::variable(ring->nvars(), i, static_cast<std::uint32_t>(q))));
  }
  return Ideal(ring, std::move(g));
}

inline std::uint64_t checked_prime_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) {
      throw ExponentOverflow(std::to_string(p) + "^" + std::to_string(e) +
                             " exceeds the exponent bound 2^20");
    }
  }
  return q;
}

/// Leading-monomial ideal of I.
inline std::vector<Monomial> initial_monomials(const Ideal& I) {
  return I.groebner_basis().leading_monomials();
}

/// dim S/I through the initial ideal; -1 for the unit ideal.
inline int krull_dimension(const Ideal& I) {
  if (I.is_zero()) return static_cast<int>(I.ring()->nvars());
  return monomial_ideal_dimension(initial_monomials(I), I.ring()->nvars());
}

/// Height of I: n - dim(S/I).
inline int height(const Ideal& I) {
  return static_cast<int>(I.ring()->nvars()) - krull_dimension(I);
}

/// Maps polynomials between rings that share a prefix of variables.
inline Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) {
    for (std::size_t i = target->nvars(); i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) throw LogicError("auxiliary variable leaked into a result");
    }
    v.push_back(Term{t.mono.resized(target->nvars()), 0, t.coef});
  }
  return Polynomial(target, std::move(v));
}

/// S[t] with an elimination order for the appended variable t.
inline RingPtr elimination_ring(const RingPtr& ring) {
  std::vector<std::string> names = ring->names();
  std::string t = "tElim";
  while (ring->index_of(t)) t += "_";
  names.push_back(t);
  return std::make_shared<const PolyRing>(ring->field(), std::move(names),
                                          MonomialOrder::elim_last);
}

/// I ∩ J = (t I + (1 - t) J) ∩ S, computed with an elimination order on the
/// auxiliary ring S[t]. Independent of the syzygy-based route.
inline Ideal intersect_by_elimination(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  const RingPtr ext = elimination_ring(I.ring());
  const std::size_t tvar = ext->nvars() - 1;
  const Polynomial t = Polynomial::variable(ext, tvar);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * change_ring(f, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * change_ring(g, ext));
  GroebnerBasis gb = buchberger(ext, gens);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (g.leading_term().mono[tvar] == 0) kept.push_back(change_ring(g, I.ring()));
  }
  return Ideal(I.ring(), std::move(kept));
}

}  // namespace lyu

#endif  // LYUBEZNIK_GROEBNER_HPP_
