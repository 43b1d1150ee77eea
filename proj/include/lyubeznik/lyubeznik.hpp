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

// Lyubeznik tables of F-pure graded rings and the consistency checks run on
// them.
//
// For R = S/I F-pure, λ_{i,j}(R) = dim Ext^{n-i}(Ext^{n-j}(R, S), S)_0. The
// F-purity gate is not optional: without it the same number can be nonzero
// while λ vanishes (see the NotFPure message and the `raw-ext` command).
//
// Projective tables are the local tables of the cone: for X = Proj(S/I) of
// dimension d, λ_{i,j}(X) = λ_{i,j}(S/I) with 0 <= i, j <= d + 1.

#ifndef LYUBEZNIK_LYUBEZNIK_HPP_
#define LYUBEZNIK_LYUBEZNIK_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/fsing.hpp"
#include "lyubeznik/groebner.hpp"
#include "lyubeznik/resolution.hpp"
#include "lyubeznik/sr_oracle.hpp"

namespace lyu {

enum class TableMode { kLocal, kProjective };

inline const char* to_string(TableMode m) {
  return m == TableMode::kLocal ? "local" : "projective";
}

/// How a cell got its value.
enum class CellOrigin {
  kComputed,
  kBelowDiagonal,  // i > j: zero without computation
  kTheoremZero,    // --fast: forced to zero by the sdim vanishing theorem
  kHole,           // budget exceeded
};

struct LyubeznikTable {
  std::uint32_t characteristic = 0;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  int d = 0;  // dim R
  TableMode mode = TableMode::kLocal;
  bool fpure_certificate = false;
  std::vector<std::vector<std::optional<std::uint64_t>>> entries;
  std::vector<std::vector<CellOrigin>> origin;

  std::size_t size() const { return entries.size(); }

  /// Value at (i, j); out-of-range indices read as 0, holes throw.
  std::uint64_t at(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) return 0;
    if (!entries[i][j]) throw LogicError("table cell is a hole");
    return *entries[i][j];
  }
  bool has(std::size_t i, std::size_t j) const {
    return i < size() && j < size() && entries[i][j].has_value();
  }
  bool complete() const {
    for (const auto& row : entries) {
      for (const auto& e : row) {
        if (!e) return false;
      }
    }
    return true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> holes() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!entries[i][j]) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// Upper-triangular rendering, rows i = 0..d, blanks below the diagonal.
  std::string render() const {
    std::size_t width = 1;
    for (const auto& row : entries) {
      for (const auto& e : row) width = std::max(width, e ? std::to_string(*e).size() : 1);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        std::string cell;
        if (j < i) {
          cell = "";
        } else if (!entries[i][j]) {
          cell = "?";
        } else {
          cell = std::to_string(*entries[i][j]);
        }
        if (j) os << ' ';
        os << std::string(width - cell.size(), ' ') << cell;
      }
      os << '\n';
    }
    return os.str();
  }
};

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string details;
};

using CheckReport = std::vector<CheckResult>;

inline bool any_failed(const CheckReport& r) {
  return std::any_of(r.begin(), r.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

struct TableOptions {
  bool strict = false;  // compute and assert the cells that must vanish
  bool fast = false;    // skip cells the vanishing theorem forces to zero
  bool minimal = true;  // minimal resolutions (false: raw Schreyer + pruning)
  bool verify = false;  // engine invariants and strand recomputation per cell
  unsigned threads = 1;
  unsigned e_max = 5;   // for the sdim used by --fast
  // Checkpoint hooks: lookup returns a stored value, record stores one.
  std::function<std::optional<std::uint64_t>(std::size_t, std::size_t)> lookup = {};
  std::function<void(std::size_t, std::size_t, std::uint64_t)> record = {};
};

struct TableResult {
  LyubeznikTable table;
  CheckReport checks;  // strict/verify findings made while computing
};

namespace detail {

inline std::vector<std::string> generator_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(g.to_string());
  return out;
}

/// Runs `work(k)` for k in [0, count) on up to `threads` threads. The first
/// exception is rethrown after all workers stop.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        {
          std::lock_guard<std::mutex> lock(error_mu);
          if (error) return;
        }
        try {
          work(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& x : parts) s += (s.empty() ? "" : sep) + x;
  return s;
}

inline std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

/// λ_{i,j} = 0 whenever i < sdim or j < min(sdim + 1, d). The cap at d is
/// what the (S_1) argument proves; without it a strongly F-regular ring
/// (sdim = d) would contradict λ_{d,d} != 0.
inline bool forced_zero(int i, int j, int sdim, int d) {
  return i < sdim || j < std::min(sdim + 1, d);
}

/// Raw dim Ext^{n-i}(Ext^{n-j}(S/I, S), S)_0 for every cell of a (d+1)-square,
/// without the F-purity gate. `lyubeznik_table` is this plus the gate; it is
/// exposed for `raw-ext` style use and for callers that certify F-purity by
/// other means.
inline TableResult double_ext_table(const Ideal& ideal, const TableOptions& opts = {}) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("expected a homogeneous ideal");
  if (ideal.is_unit()) throw InvalidArgument("expected a proper ideal");
  const int d = krull_dimension(ideal);
  const std::size_t n = ideal.ring()->nvars();
  const std::size_t size = static_cast<std::size_t>(d) + 1;

  TableResult out;
  LyubeznikTable& t = out.table;
  t.characteristic = ideal.ring()->characteristic();
  t.vars = ideal.ring()->names();
  t.generators = detail::generator_strings(ideal);
  t.d = d;
  t.entries.assign(size, std::vector<std::optional<std::uint64_t>>(size));
  t.origin.assign(size, std::vector<CellOrigin>(size, CellOrigin::kComputed));

  std::optional<int> sd;
  if (opts.fast) {
    const SdimResult s = sdim(ideal, opts.e_max);
    if (s.certified) sd = s.value;
  }

  struct Cell {
    std::size_t i, j;
    bool must_vanish;  // strict-mode extra cell
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i > j) {
        t.entries[i][j] = 0;
        t.origin[i][j] = CellOrigin::kBelowDiagonal;
        if (opts.strict) cells.push_back({i, j, true});
        continue;
      }
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      if (sd && forced_zero(ii, jj, *sd, d)) {
        t.entries[i][j] = 0;
        t.origin[i][j] = CellOrigin::kTheoremZero;
        continue;
      }
      cells.push_back({i, j, false});
    }
  }
  if (opts.strict) {
    for (std::size_t j = size; j <= n; ++j) {
      for (std::size_t i = 0; i <= n; ++i) cells.push_back({i, j, true});
    }
  }

  const DoubleExt de(ideal, opts.minimal);
  std::mutex mu;
  std::vector<std::string> strict_failures, verify_failures;
  std::vector<std::uint64_t> values(cells.size());

  if (opts.verify) {
    const auto& res = de.quotient_resolution();
    if (!verify_groebner(ideal.groebner_basis())) verify_failures.push_back("Groebner basis");
    if (!verify_resolution(res)) verify_failures.push_back("resolution of S/I");
  }

  detail::parallel_for(cells.size(), opts.threads, [&](std::size_t k) {
    const Cell& c = cells[k];
    std::optional<std::uint64_t> v;
    if (!c.must_vanish && opts.lookup) v = opts.lookup(c.i, c.j);
    if (!v) {
      try {
        v = de.degree_zero(c.i, c.j);
      } catch (const BudgetExceeded&) {
        if (c.must_vanish) throw;
        std::lock_guard<std::mutex> lock(mu);
        t.entries[c.i][c.j].reset();
        t.origin[c.i][c.j] = CellOrigin::kHole;
        return;
      }
      if (!c.must_vanish && opts.record) opts.record(c.i, c.j, *v);
    }
    std::string verify_note;
    if (opts.verify) {
      if (de.inner(c.j).rank() > 0 && !verify_resolution(de.inner_resolution(c.j))) {
        verify_note = "resolution of the inner Ext at j=" + std::to_string(c.j);
      }
      const std::size_t strand = strand_double_ext(de, c.i, c.j);
      if (strand != *v) {
        verify_note += (verify_note.empty() ? "" : "; ") + std::string("strand mismatch at ") +
                       detail::cell_name(c.i, c.j) + ": " + std::to_string(*v) + " vs " +
                       std::to_string(strand);
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    if (!verify_note.empty()) verify_failures.push_back(verify_note);
    if (c.must_vanish) {
      if (*v != 0) strict_failures.push_back(detail::cell_name(c.i, c.j) + " = " + std::to_string(*v));
    } else {
      t.entries[c.i][c.j] = v;
    }
  });

  if (opts.strict) {
    std::sort(strict_failures.begin(), strict_failures.end());
    out.checks.push_back({"strict_vanishing",
                          strict_failures.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                          strict_failures.empty()
                              ? "cells with i > j or j > d computed to 0"
                              : "nonzero: " + detail::join(strict_failures, ", ")});
  }
  if (opts.verify) {
    std::sort(verify_failures.begin(), verify_failures.end());
    out.checks.push_back({"engine_invariants",
                          verify_failures.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                          verify_failures.empty()
                              ? "Groebner confluence, resolution exactness, strand ranks"
                              : detail::join(verify_failures, "; ")});
  }
  return out;
}

inline std::string not_fpure_message(const Ideal& ideal) {
  return "S/I fails Fedder's criterion in characteristic " +
         std::to_string(ideal.ring()->characteristic()) +
         "; dim Ext^{n-i}(Ext^{n-j}(S/I,S),S)_0 equals λ_{i,j} only for F-pure rings, so no table "
         "is produced (raw-ext reports the uninterpreted dimension)";
}

/// Lyubeznik table of S/I; throws NotFPure unless Fedder's criterion holds.
inline TableResult lyubeznik_table(const Ideal& ideal, const TableOptions& opts = {},
                                   TableMode mode = TableMode::kLocal) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("expected a homogeneous ideal");
  if (ideal.is_unit()) throw InvalidArgument("expected a proper ideal");
  if (!fedder_is_fpure(ideal)) throw NotFPure(not_fpure_message(ideal));
  TableResult out = double_ext_table(ideal, opts);
  out.table.fpure_certificate = true;
  out.table.mode = mode;
  return out;
}

/// Table of X = Proj(S/I), indexed 0..dim X + 1.
inline TableResult projective_table(const Ideal& ideal, const TableOptions& opts = {}) {
  if (ideal.is_homogeneous() && !ideal.is_unit() && krull_dimension(ideal) < 1) {
    throw InvalidArgument("Proj(S/I) is empty");
  }
  return lyubeznik_table(ideal, opts, TableMode::kProjective);
}

/// Upper triangularity and λ_{d,d} != 0.
inline CheckReport table_shape_checks(const LyubeznikTable& t) {
  CheckReport out;
  std::string below;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.has(i, j) && t.at(i, j) != 0) below += detail::cell_name(i, j) + " ";
    }
  }
  out.push_back({"upper_triangular", below.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                 below.empty() ? "λ_{i,j} = 0 for i > j" : "nonzero below diagonal: " + below});
  const auto d = static_cast<std::size_t>(t.d);
  if (!t.has(d, d)) {
    out.push_back({"top_nonzero", CheckStatus::kSkipped, "λ_{d,d} is a hole"});
  } else {
    const auto v = t.at(d, d);
    out.push_back({"top_nonzero", v >= 1 ? CheckStatus::kPass : CheckStatus::kFail,
                   "λ_{d,d} = " + std::to_string(v)});
  }
  return out;
}

inline CheckResult check_vanishing(const LyubeznikTable& t, const SdimResult& sd) {
  const std::string name = "sdim_vanishing";
  if (!sd.certified) return {name, CheckStatus::kSkipped, "sdim not certified"};
  bool theorem_used = false;
  std::string bad;
  std::size_t holes = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      if (!forced_zero(ii, jj, sd.value, t.d)) continue;
      if (t.origin[i][j] == CellOrigin::kTheoremZero) theorem_used = true;
      if (!t.has(i, j)) {
        ++holes;
        continue;
      }
      if (t.at(i, j) != 0) bad += detail::cell_name(i, j) + " ";
    }
  }
  if (!bad.empty()) return {name, CheckStatus::kFail, "sdim = " + std::to_string(sd.value) + ", nonzero: " + bad};
  std::string details = "sdim = " + std::to_string(sd.value);
  if (holes) details += ", " + std::to_string(holes) + " hole(s) not checked";
  if (theorem_used) details += ", some cells were set from the theorem (--fast)";
  return {name, CheckStatus::kPass, details};
}

/// λ_{d+1,d+1}(X) = λ_{0,1}(X) + 1 and λ_{0,j}(X) = λ_{d+2-j,d+1}(X) for
/// 2 <= j <= d, d = dim X. Needs the caller's assertion that X is
/// Cohen-Macaulay.
inline CheckResult check_projective_duality(const LyubeznikTable& t, bool assert_cm) {
  const std::string name = "projective_duality";
  if (t.mode != TableMode::kProjective) return {name, CheckStatus::kSkipped, "not a projective table"};
  if (!assert_cm) return {name, CheckStatus::kSkipped, "needs --assert-cm"};
  const std::size_t d = static_cast<std::size_t>(t.d - 1);
  std::string bad;
  auto eq = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e, std::uint64_t shift) {
    if (!t.has(a, b) || !t.has(c, e)) {
      bad += "hole near " + detail::cell_name(a, b) + " ";
      return;
    }
    if (t.at(a, b) != t.at(c, e) + shift) {
      bad += detail::cell_name(a, b) + " vs " + detail::cell_name(c, e) + " ";
    }
  };
  eq(d + 1, d + 1, 0, 1, 1);
  for (std::size_t j = 2; j <= d; ++j) eq(0, j, d + 2 - j, d + 1, 0);
  if (!bad.empty()) return {name, CheckStatus::kFail, bad};
  return {name, CheckStatus::kPass, "dim X = " + std::to_string(d)};
}

/// The five clauses for a Stanley-Reisner cone: with t components and
/// h^j = dim H^j_m(R)_0 = dim H~^{j-1}(Δ), λ_{0,1} = t - 1, λ_{d+1,d+1} = t,
/// λ_{0,j} = h^j and λ_{j,d+1} = h^{d+2-j} for 2 <= j <= d, all else 0.
inline CheckResult check_theorem_d(const LyubeznikTable& t, const SimplicialComplex& c,
                                   std::uint32_t p, bool assert_cm, bool assert_equidim) {
  const std::string name = "sr_cohomology_formula";
  if (t.mode != TableMode::kProjective) return {name, CheckStatus::kSkipped, "not a projective table"};
  if (!assert_cm || !assert_equidim) {
    return {name, CheckStatus::kSkipped, "needs --assert-cm and --assert-equidim"};
  }
  const std::size_t d = static_cast<std::size_t>(t.d - 1);
  if (c.dimension() != static_cast<int>(d)) {
    return {name, CheckStatus::kFail, "complex dimension does not match dim X"};
  }
  const std::uint64_t comps = connected_components(c);
  const auto h = [&](std::size_t j) { return hochster_degree_zero(c, static_cast<int>(j), p); };
  std::vector<std::vector<std::uint64_t>> expect(d + 2, std::vector<std::uint64_t>(d + 2, 0));
  expect[0][1] = comps - 1;
  expect[d + 1][d + 1] = comps;
  for (std::size_t j = 2; j <= d; ++j) {
    expect[0][j] = h(j);
    expect[j][d + 1] = h(d + 2 - j);
  }
  if (t.size() != d + 2) return {name, CheckStatus::kFail, "table has the wrong size"};
  std::string bad;
  for (std::size_t i = 0; i < d + 2; ++i) {
    for (std::size_t j = 0; j < d + 2; ++j) {
      if (!t.has(i, j)) {
        bad += "hole " + detail::cell_name(i, j) + " ";
        continue;
      }
      if (t.at(i, j) != expect[i][j]) {
        bad += detail::cell_name(i, j) + " = " + std::to_string(t.at(i, j)) + " expected " +
               std::to_string(expect[i][j]) + " ";
      }
    }
  }
  if (!bad.empty()) return {name, CheckStatus::kFail, bad};
  return {name, CheckStatus::kPass, "t = " + std::to_string(comps) + ", dim X = " + std::to_string(d)};
}

}  // namespace lyu

#endif  // LYUBEZNIK_LYUBEZNIK_HPP_
