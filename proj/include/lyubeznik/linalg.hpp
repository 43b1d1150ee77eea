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

// Sparse linear algebra over F_p, and the degree strands of graded objects as
// explicit matrices. Used as an oracle independent of the Groebner engine.

#ifndef LYUBEZNIK_LINALG_HPP_
#define LYUBEZNIK_LINALG_HPP_

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lyubeznik/field.hpp"
#include "lyubeznik/monomial.hpp"
#include "lyubeznik/monomial_ideal.hpp"
#include "lyubeznik/terms.hpp"

namespace lyu {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse row: (column, nonzero value) sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, Coeff>>;

/// Incremental row echelon form; rank() is the dimension of the span of all
/// rows added so far.
class RowEchelon {
 public:
  explicit RowEchelon(const PrimeField& k) : k_(k) {}

  /// Returns true if the row was independent of the previous ones.
  bool add(SparseRow row) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Coeff inv = k_.inv(row.front().second);
        for (auto& e : row) e.second = k_.mul(e.second, inv);
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      row = combine(row, k_.neg(row.front().second), it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  // a + c * b; the leading entries cancel by construction.
  SparseRow combine(const SparseRow& a, Coeff c, const SparseRow& b) const {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, k_.mul(c, b[j].second));
        ++j;
      } else {
        const Coeff s = k_.add(a[i].second, k_.mul(c, b[j].second));
        if (s) out.emplace_back(a[i].first, s);
        ++i;
        ++j;
      }
    }
    return out;
  }

  PrimeField k_;
  std::unordered_map<std::uint32_t, SparseRow> pivots_;
};

inline std::size_t rank_mod_p(const std::vector<SparseRow>& rows, const PrimeField& k) {
  RowEchelon e(k);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

/// Indexing of the degree-d piece of a twisted free module: pairs
/// (component i, monomial of degree d - a_i).
class StrandBasis {
 public:
  StrandBasis(std::size_t nvars, const std::vector<int>& twists, int d) {
    for (std::size_t i = 0; i < twists.size(); ++i) {
      index_.emplace_back();
      for (const auto& m : monomials_of_degree(nvars, d - twists[i])) {
        index_.back().emplace(m, static_cast<std::uint32_t>(size_++));
      }
    }
  }

  std::size_t size() const { return size_; }

  std::uint32_t index(std::uint32_t comp, const Monomial& m) const {
    return index_.at(comp).at(m);
  }

  /// Coordinates of a homogeneous vector of this degree.
  SparseRow coordinates(const Vec& v) const {
    SparseRow row;
    row.reserve(v.size());
    for (const auto& t : v) row.emplace_back(index(t.comp, t.mono), t.coef);
    std::sort(row.begin(), row.end());
    return row;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
};

/// Rank of the degree-d strand of the map whose columns (in a module with
/// twists `target_twists`) have degrees `source_twists`: the span of all
/// m * column_j with deg m = d - source_twists[j].
inline std::size_t strand_rank(const std::vector<Vec>& columns,
                               const std::vector<int>& source_twists,
                               const std::vector<int>& target_twists, std::size_t nvars,
                               int d, const PrimeField& k) {
  const StrandBasis basis(nvars, target_twists, d);
  RowEchelon e(k);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty()) continue;
    for (const auto& m : monomials_of_degree(nvars, d - source_twists[j])) {
      Vec shifted = vec::times(1, m, columns[j], k);
      e.add(basis.coordinates(shifted));
      if (e.rank() == basis.size()) return e.rank();
    }
  }
  return e.rank();
}

}  // namespace lyu

#endif  // LYUBEZNIK_LINALG_HPP_
