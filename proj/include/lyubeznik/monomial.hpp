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

#ifndef LYUBEZNIK_MONOMIAL_HPP_
#define LYUBEZNIK_MONOMIAL_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "lyubeznik/errors.hpp"

namespace lyu {

/// Largest number of variables a ring may have (including auxiliary
/// elimination variables).
inline constexpr std::size_t kMaxVars = 24;

/// Hard per-variable exponent bound. Frobenius powers x^{p^e} are allowed up
/// to p^e <= kMaxExponent; anything larger raises ExponentOverflow.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

enum class MonomialOrder {
  degrevlex,
  lex,
  // Product order: exponent of the last variable first, then degrevlex on
  // the remaining ones. Used only on auxiliary rings built for elimination.
  elim_last,
};

/// Exponent vector with inline storage, cached total degree and a support
/// bitmask for fast divisibility rejection.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : n_(static_cast<std::uint32_t>(n)) {
    if (n > kMaxVars) {
      throw InvalidArgument("at most " + std::to_string(kMaxVars) +
                            " variables are supported");
    }
  }
  Monomial(std::initializer_list<std::uint32_t> exps)
      : Monomial(std::span<const std::uint32_t>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const std::uint32_t> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1) {
    Monomial m(n);
    m.set(i, power);
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t support() const { return support_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t v) {
    if (v > kMaxExponent) {
      throw ExponentOverflow("exponent " + std::to_string(v) +
                             " exceeds the bound 2^20");
    }
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
    if (v) {
      support_ |= (1u << i);
    } else {
      support_ &= ~(1u << i);
    }
  }

  bool divides(const Monomial& o) const {
    if (support_ & ~o.support_) return false;
    if (deg_ > o.deg_) return false;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& o) const { return (support_ & o.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    std::uint32_t over = 0;
    for (std::uint32_t i = 0; i < a.n_; ++i) {
      r.e_[i] += b.e_[i];
      over |= r.e_[i];
    }
    if (over > kMaxExponent) check_bound(r);
    r.deg_ = a.deg_ + b.deg_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// this / o; caller guarantees o divides this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::uint32_t i = 0; i < n_; ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    r.recompute_support();
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    std::uint32_t d = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    r.support_ = support_ | o.support_;
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r(*this);
    std::uint32_t d = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      r.e_[i] = std::min(e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    r.recompute_support();
    return r;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint64_t v = std::uint64_t{e_[i]} * k;
      if (v > kMaxExponent) {
        throw ExponentOverflow("exponent " + std::to_string(v) +
                               " exceeds the bound 2^20");
      }
      r.set(i, static_cast<std::uint32_t>(v));
    }
    return r;
  }

  /// Drops or appends trailing variables (appended ones get exponent 0).
  Monomial resized(std::size_t n) const {
    Monomial r(n);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, n_); ++i) r.set(i, e_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_ || a.deg_ != b.deg_ || a.support_ != b.support_) return false;
    for (std::uint32_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != b.e_[i]) return false;
    }
    return true;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t i = 0; i < n_; ++i) {
      h ^= e_[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static void check_bound(const Monomial& m) {
    for (std::uint32_t i = 0; i < m.n_; ++i) {
      if (m.e_[i] > kMaxExponent) {
        throw ExponentOverflow("exponent " + std::to_string(m.e_[i]) +
                               " exceeds the bound 2^20");
      }
    }
  }
  void recompute_support() {
    support_ = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (e_[i]) support_ |= (1u << i);
    }
  }

  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint32_t support_ = 0;
  std::uint32_t n_ = 0;
};

namespace detail {

inline std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b,
                                        std::size_t upto) {
  for (std::size_t i = upto; i-- > 0;) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Three-way comparison in the given order; `greater` means a > b.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    MonomialOrder order) {
  if (a.size() != b.size()) {
    throw InvalidArgument("comparing monomials of different lengths");
  }
  switch (order) {
    case MonomialOrder::degrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return detail::revlex_tail(a, b, a.size());
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::elim_last: {
      const std::size_t last = a.size() - 1;
      if (a[last] != b[last]) return a[last] <=> b[last];
      const std::uint32_t da = a.degree() - a[last];
      const std::uint32_t db = b.degree() - b[last];
      if (da != db) return da <=> db;
      return detail::revlex_tail(a, b, last);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace lyu

#endif  // LYUBEZNIK_MONOMIAL_HPP_
