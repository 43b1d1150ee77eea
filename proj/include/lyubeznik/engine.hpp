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

// Buchberger engine shared by ideals and submodules of graded free modules.
//
// Pair handling follows Gebauer-Moeller. Homogeneous input is processed one
// degree at a time (all S-pairs of degree d, then the inputs of degree d), so
// that an optional degree bound truncates the computation and inputs that
// reduce to zero are exactly the non-minimal generators. With tracking
// enabled every element carries its representation in terms of the inputs;
// reductions of the main part to zero are syzygies (Schreyer), and the
// product criterion is switched off because the Koszul syzygies it skips are
// needed.

#ifndef LYUBEZNIK_ENGINE_HPP_
#define LYUBEZNIK_ENGINE_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/field.hpp"
#include "lyubeznik/terms.hpp"

namespace lyu {

/// Process-wide cap on S-pairs processed by a single Groebner computation.
inline std::atomic<std::uint64_t>& pair_budget() {
  static std::atomic<std::uint64_t> budget{10'000'000};
  return budget;
}

/// Lowers the pair budget for a scope, never raising it.
class ScopedPairBudget {
 public:
  explicit ScopedPairBudget(std::uint64_t cap) : saved_(pair_budget().load()) {
    pair_budget() = std::min(saved_, cap);
  }
  ~ScopedPairBudget() { pair_budget() = saved_; }
  ScopedPairBudget(const ScopedPairBudget&) = delete;
  ScopedPairBudget& operator=(const ScopedPairBudget&) = delete;

 private:
  std::uint64_t saved_;
};

/// Process-wide wall-clock deadline for Groebner computations, in
/// steady_clock ticks; 0 means none. Single reductions with Frobenius powers
/// can run for minutes, so a pair count alone does not bound time.
inline std::atomic<std::int64_t>& engine_deadline() {
  static std::atomic<std::int64_t> ticks{0};
  return ticks;
}

inline void check_engine_deadline() {
  const std::int64_t d = engine_deadline().load(std::memory_order_relaxed);
  if (d != 0 && std::chrono::steady_clock::now().time_since_epoch().count() > d) {
    throw BudgetExceeded("Groebner computation passed its time limit");
  }
}

/// Sets a deadline `seconds` from now for a scope, never extending one that
/// is already earlier.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(double seconds) : saved_(engine_deadline().load()) {
    const auto until = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(seconds));
    const std::int64_t t = until.time_since_epoch().count();
    engine_deadline() = saved_ == 0 ? t : std::min(saved_, t);
  }
  ~ScopedDeadline() { engine_deadline() = saved_; }
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::int64_t saved_;
};

struct EngineOptions {
  MonomialOrder mono = MonomialOrder::degrevlex;
  bool pot = true;
  /// Twists of the ambient free module of the main part (empty = all zero).
  std::vector<int> twists;
  /// Twists of the module the representations live in.
  std::vector<int> rep_twists;
  bool track = false;
  /// Only sound for ideals (rank one, no tracking).
  bool product_criterion = false;
  std::optional<int> degree_bound;
  bool tail_reduce = true;
};

class GroebnerEngine {
 public:
  struct Syzygy {
    Vec rep;
    int degree;
  };

  GroebnerEngine(const PrimeField& field, EngineOptions opts)
      : k_(field), opts_(std::move(opts)) {
    ord_ = TermOrder{opts_.mono, opts_.pot, opts_.twists};
    rep_ord_ = TermOrder{opts_.mono, true, {}};
    if (opts_.track) opts_.product_criterion = false;
  }

  GroebnerEngine(const GroebnerEngine&) = delete;
  GroebnerEngine& operator=(const GroebnerEngine&) = delete;

  /// Queues an input; `rep` is its tracked representation (usually e_j).
  void add_input(Vec main, Vec rep = {}) {
    Input in;
    in.index = inputs_.size();
    in.homogeneous = vec::is_homogeneous(main, opts_.twists);
    in.degree = vec::top_degree(main, opts_.twists);
    if (main.empty() && !rep.empty()) in.degree = vec::top_degree(rep, opts_.rep_twists);
    in.main = std::move(main);
    in.rep = std::move(rep);
    inputs_.push_back(std::move(in));
    minimal_.push_back(false);
  }

  void run() {
    homogeneous_ = std::all_of(inputs_.begin(), inputs_.end(),
                               [](const Input& in) { return in.homogeneous; });
    if (homogeneous_) {
      run_graded();
    } else {
      run_sugar();
    }
  }

  bool homogeneous() const { return homogeneous_; }
  std::uint64_t pairs_processed() const { return pairs_processed_; }

  /// Main parts of all elements found (a Groebner basis, not reduced).
  std::vector<const Vec*> basis() const {
    std::vector<const Vec*> out;
    for (const auto& e : elems_) {
      if (!e.redundant) out.push_back(&e.main);
    }
    return out;
  }

  /// Minimal, tail-reduced, monic basis sorted by increasing leading term.
  std::vector<Vec> reduced_basis() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i].redundant) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < elems_.size() && !dominated; ++j) {
        if (j == i || elems_[j].redundant) continue;
        const auto& a = elems_[j].main.front();
        const auto& b = elems_[i].main.front();
        if (a.comp == b.comp && a.mono.divides(b.mono) && (!(a.mono == b.mono) || j < i)) {
          dominated = true;
        }
      }
      if (!dominated) keep.push_back(i);
    }
    std::vector<Vec> out;
    out.reserve(keep.size());
    for (auto i : keep) {
      Vec f = elems_[i].main;
      Vec head{f.front()};
      Vec tail(f.begin() + 1, f.end());
      Vec dummy;
      reduce_full(tail, dummy, false, &keep);
      f = head;
      f.insert(f.end(), tail.begin(), tail.end());
      vec::make_monic(f, k_);
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return ord_(a.front(), b.front()) < 0; });
    return out;
  }

  /// Normal form of f against the current basis.
  Vec reduce(Vec f) const {
    Vec dummy;
    reduce_full(f, dummy, false, nullptr);
    return f;
  }

  const std::vector<Syzygy>& syzygies() const { return syz_; }

  /// For homogeneous runs: whether input j survived as a minimal generator.
  const std::vector<bool>& minimal_inputs() const { return minimal_; }

  const TermOrder& order() const { return ord_; }

 private:
  struct Input {
    std::size_t index = 0;
    Vec main;
    Vec rep;
    int degree = 0;
    bool homogeneous = true;
  };
  struct Elem {
    Vec main;
    Vec rep;
    int sugar = 0;
    bool redundant = false;
  };
  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    int degree;
    bool alive = true;
  };

  int lead_degree(const Elem& e) const { return vec::degree_of(e.main.front(), opts_.twists); }

  void charge_pair() {
    check_engine_deadline();
    if (++pairs_processed_ > pair_budget().load()) {
      throw BudgetExceeded("Groebner computation exceeded the budget of " +
                           std::to_string(pair_budget().load()) + " S-pairs");
    }
  }

  const Elem* find_reducer(const Term& t, const std::vector<std::size_t>* restrict_to) const {
    if (t.comp >= by_comp_.size()) return nullptr;
    if (restrict_to) {
      for (auto idx : *restrict_to) {
        const auto& lt = elems_[idx].main.front();
        if (lt.comp == t.comp && lt.mono.divides(t.mono)) return &elems_[idx];
      }
      return nullptr;
    }
    for (auto idx : by_comp_[t.comp]) {
      const auto& lt = elems_[idx].main.front();
      if (lt.mono.divides(t.mono)) return &elems_[idx];
    }
    return nullptr;
  }

  // Reduces f (and its representation) until no term is divisible by a
  // leading term; with `top_only` stops at the first irreducible lead.
  void reduce_full(Vec& f, Vec& rep, bool top_only,
                   const std::vector<std::size_t>* restrict_to) const {
    const Coeff minus_one = k_.neg(1);
    std::size_t pos = 0;
    std::uint32_t steps = 0;
    while (pos < f.size()) {
      if ((++steps & 0xfff) == 0) check_engine_deadline();
      const Term& t = f[pos];
      const Elem* g = find_reducer(t, restrict_to);
      if (!g) {
        if (top_only) break;
        ++pos;
        continue;
      }
      const Term& lt = g->main.front();
      const Coeff c = k_.mul(minus_one, k_.mul(t.coef, k_.inv(lt.coef)));
      const Monomial m = t.mono / lt.mono;
      if (opts_.track && !g->rep.empty()) vec::axpy(rep, c, &m, g->rep, k_, rep_ord_);
      vec::axpy_from(f, pos, c, &m, g->main, k_, ord_);
    }
  }

  void reduce_new(Vec& f, Vec& rep) const {
    reduce_full(f, rep, true, nullptr);
    if (!f.empty() && opts_.tail_reduce) {
      Vec head{f.front()};
      Vec tail(f.begin() + 1, f.end());
      reduce_full(tail, rep, false, nullptr);
      head.insert(head.end(), tail.begin(), tail.end());
      f.swap(head);
    }
  }

  void insert_element(Vec main, Vec rep, int sugar) {
    const Coeff inv = k_.inv(main.front().coef);
    vec::scale(main, inv, k_);
    vec::scale(rep, inv, k_);
    Elem e;
    e.main = std::move(main);
    e.rep = std::move(rep);
    e.sugar = sugar;
    const std::uint32_t idx = static_cast<std::uint32_t>(elems_.size());
    const Term& lt = e.main.front();
    if (lt.comp >= by_comp_.size()) by_comp_.resize(lt.comp + 1);
    elems_.push_back(std::move(e));
    update_pairs(idx);
    by_comp_[elems_[idx].main.front().comp].push_back(idx);
  }

  int pair_degree(std::uint32_t i, std::uint32_t j, const Monomial& lcm,
                  std::uint32_t comp) const {
    if (homogeneous_) {
      return static_cast<int>(lcm.degree()) +
             (comp < opts_.twists.size() ? opts_.twists[comp] : 0);
    }
    const auto& a = elems_[i];
    const auto& b = elems_[j];
    const int da = a.sugar + static_cast<int>(lcm.degree() - a.main.front().mono.degree());
    const int db = b.sugar + static_cast<int>(lcm.degree() - b.main.front().mono.degree());
    return std::max(da, db);
  }

  // Gebauer-Moeller update for the new element h.
  void update_pairs(std::uint32_t h) {
    const Term& lh = elems_[h].main.front();
    struct Cand {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    if (lh.comp < by_comp_.size()) {
      for (auto g : by_comp_[lh.comp]) {
        if (elems_[g].redundant) continue;
        const Term& lg = elems_[g].main.front();
        cands.push_back(Cand{g, lg.mono.lcm(lh.mono),
                             opts_.product_criterion && lg.mono.coprime(lh.mono), true});
      }
    }
    // Old pairs whose lcm is a proper multiple through h (criterion B_k).
    for (auto& p : pairs_) {
      if (!p.alive || p.comp != lh.comp) continue;
      if (!lh.mono.divides(p.lcm)) continue;
      const Monomial li = elems_[p.i].main.front().mono.lcm(lh.mono);
      const Monomial lj = elems_[p.j].main.front().mono.lcm(lh.mono);
      if (!(li == p.lcm) && !(lj == p.lcm)) p.alive = false;
    }
    // Among new pairs keep one representative per minimal lcm; drop the class
    // entirely if one of its members has coprime leading terms.
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.lcm.degree() < b.lcm.degree();
    });
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b) continue;
        if (cands[b].lcm.degree() > cands[a].lcm.degree()) break;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (cands[b].lcm == cands[a].lcm) {
          // Equal lcm: first member represents the class unless any member
          // is coprime.
          if (cands[b].coprime || b < a) {
            cands[a].keep = false;
            break;
          }
        } else {
          cands[a].keep = false;
          break;
        }
      }
    }
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      Pair p{c.g, h, c.lcm, lh.comp, pair_degree(c.g, h, c.lcm, lh.comp)};
      pairs_.push_back(std::move(p));
    }
    // Elements whose lead is a multiple of lead(h) take no further pairs.
    if (lh.comp < by_comp_.size()) {
      for (auto g : by_comp_[lh.comp]) {
        if (!elems_[g].redundant && lh.mono.divides(elems_[g].main.front().mono)) {
          elems_[g].redundant = true;
        }
      }
    }
    compact_pairs();
  }

  void compact_pairs() {
    if (pairs_.size() < 1024) return;
    std::size_t dead = 0;
    for (const auto& p : pairs_) dead += !p.alive;
    if (dead * 2 < pairs_.size()) return;
    pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(),
                                [](const Pair& p) { return !p.alive; }),
                 pairs_.end());
  }

  void process_pair(const Pair& p) {
    charge_pair();
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    const Monomial ma = p.lcm / a.main.front().mono;
    const Monomial mb = p.lcm / b.main.front().mono;
    // Elements are monic.
    Vec s = vec::times(1, ma, a.main, k_);
    vec::axpy(s, k_.neg(1), &mb, b.main, k_, ord_);
    Vec rep;
    if (opts_.track) {
      rep = vec::times(1, ma, a.rep, k_);
      vec::axpy(rep, k_.neg(1), &mb, b.rep, k_, rep_ord_);
    }
    reduce_new(s, rep);
    if (s.empty()) {
      if (opts_.track && !rep.empty()) syz_.push_back(Syzygy{std::move(rep), p.degree});
      return;
    }
    insert_element(std::move(s), std::move(rep), p.degree);
  }

  void process_input(Input& in) {
    Vec f = std::move(in.main);
    Vec rep = std::move(in.rep);
    reduce_new(f, rep);
    if (f.empty()) {
      if (opts_.track && !rep.empty()) syz_.push_back(Syzygy{std::move(rep), in.degree});
      return;
    }
    minimal_[in.index] = true;
    insert_element(std::move(f), std::move(rep), in.degree);
  }

  void run_graded() {
    std::vector<std::size_t> order(inputs_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inputs_[a].degree < inputs_[b].degree;
    });
    std::size_t next_input = 0;
    // Zero inputs contribute nothing but their trivial syzygy e_j.
    while (true) {
      int d = std::numeric_limits<int>::max();
      for (const auto& p : pairs_) {
        if (p.alive) d = std::min(d, p.degree);
      }
      if (next_input < order.size()) d = std::min(d, inputs_[order[next_input]].degree);
      if (d == std::numeric_limits<int>::max()) break;
      if (opts_.degree_bound && d > *opts_.degree_bound) break;
      std::vector<std::size_t> batch;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].alive && pairs_[i].degree == d) batch.push_back(i);
      }
      std::sort(batch.begin(), batch.end(), [&](std::size_t x, std::size_t y) {
        const Pair& a = pairs_[x];
        const Pair& b = pairs_[y];
        Term ta{a.lcm, a.comp, 1}, tb{b.lcm, b.comp, 1};
        auto c = ord_(ta, tb);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      // Copy out: processing appends pairs and may compact the vector.
      std::vector<Pair> todo;
      todo.reserve(batch.size());
      for (auto i : batch) {
        todo.push_back(pairs_[i]);
        pairs_[i].alive = false;
      }
      for (auto& p : todo) process_pair(p);
      while (next_input < order.size() && inputs_[order[next_input]].degree == d) {
        process_input(inputs_[order[next_input]]);
        ++next_input;
      }
    }
  }

  void run_sugar() {
    std::vector<std::size_t> order(inputs_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inputs_[a].degree < inputs_[b].degree;
    });
    for (auto i : order) process_input(inputs_[i]);
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (!pairs_[i].alive) continue;
        if (!best) {
          best = i;
          continue;
        }
        const Pair& a = pairs_[i];
        const Pair& b = pairs_[*best];
        if (a.degree != b.degree) {
          if (a.degree < b.degree) best = i;
          continue;
        }
        Term ta{a.lcm, a.comp, 1}, tb{b.lcm, b.comp, 1};
        if (ord_(ta, tb) < 0) best = i;
      }
      if (!best) break;
      Pair p = pairs_[*best];
      pairs_[*best].alive = false;
      process_pair(p);
    }
  }

  PrimeField k_;
  EngineOptions opts_;
  TermOrder ord_;
  TermOrder rep_ord_;
  std::vector<Input> inputs_;
  std::vector<Elem> elems_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<Pair> pairs_;
  std::vector<Syzygy> syz_;
  std::vector<bool> minimal_;
  bool homogeneous_ = true;
  std::uint64_t pairs_processed_ = 0;
};

}  // namespace lyu

#endif  // LYUBEZNIK_ENGINE_HPP_
