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

#ifndef LYUBEZNIK_POLYNOMIAL_HPP_
#define LYUBEZNIK_POLYNOMIAL_HPP_

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/field.hpp"
#include "lyubeznik/monomial.hpp"
#include "lyubeznik/terms.hpp"

namespace lyu {

/// F_p[x_1, ..., x_n], every variable of degree 1.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::degrevlex)
      : field_(field), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
    if (names_.size() > kMaxVars) {
      throw InvalidArgument("at most " + std::to_string(kMaxVars) +
                            " variables are supported");
    }
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) {
        throw InvalidArgument("bad variable name '" + n + "'");
      }
      for (char c : n) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          throw InvalidArgument("bad variable name '" + n + "'");
        }
      }
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable '" + n + "'");
    }
  }

  static std::shared_ptr<const PolyRing> make(
      std::uint32_t p, std::vector<std::string> names,
      MonomialOrder order = MonomialOrder::degrevlex) {
    return std::make_shared<const PolyRing>(PrimeField(p), std::move(names), order);
  }

  /// x1..xn style names.
  static std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
  }

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder order() const { return order_; }
  TermOrder term_order() const { return TermOrder{order_, true, {}}; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, Vec terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto& t : terms_) {
      if (t.mono.size() != ring_->nvars()) {
        throw InvalidArgument("monomial length does not match the ring");
      }
      t.comp = 0;
    }
    vec::sort_and_combine(terms_, ring_->field(), ring_->term_order());
  }

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    Coeff v = ring->field().from_int(c);
    Polynomial p(ring);
    if (v) p.terms_.push_back(Term{Monomial(ring->nvars()), 0, v});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back(Term{Monomial::variable(ring->nvars(), i), 0, 1});
    return p;
  }
  static Polynomial monomial(RingPtr ring, Coeff c, const Monomial& m) {
    Polynomial p(ring);
    if (c % ring->characteristic()) {
      p.terms_.push_back(Term{m, 0, c % ring->characteristic()});
    }
    return p;
  }
  /// Wraps terms already in canonical order (engine output).
  static Polynomial from_sorted(RingPtr ring, Vec terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    for (auto& t : p.terms_) t.comp = 0;
    return p;
  }

  static Polynomial parse(RingPtr ring, std::string_view text, std::size_t line = 1,
                          std::size_t column_offset = 0);

  const RingPtr& ring() const { return ring_; }
  const Vec& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const { return vec::is_homogeneous(terms_, {}); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    return from_sorted(a.ring_, vec::add(a.terms_, b.terms_, a.ring_->field(),
                                         a.ring_->term_order()));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    return from_sorted(a.ring_, vec::sub(a.terms_, b.terms_, a.ring_->field(),
                                         a.ring_->term_order()));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    const auto& k = a.ring_->field();
    const auto ord = a.ring_->term_order();
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    Vec r;
    for (const auto& t : small.terms_) vec::axpy(r, t.coef, &t.mono, big.terms_, k, ord);
    return from_sorted(a.ring_, std::move(r));
  }
  Polynomial scaled(Coeff c) const {
    Polynomial r(*this);
    vec::scale(r.terms_, c % ring_->characteristic(), ring_->field());
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    return from_sorted(ring_, vec::times(1, m, terms_, ring_->field()));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// f^{p^e}. Frobenius is a ring map over F_p, so each term c*m goes to
  /// c^{p^e} * m^{p^e} = c * m^{p^e} and the order of terms is preserved.
  Polynomial frobenius_pow(unsigned e) const {
    if (e == 0) throw InvalidArgument("Frobenius exponent must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= ring_->characteristic();
      if (q > kMaxExponent) {
        throw ExponentOverflow("p^e = " + std::to_string(ring_->characteristic()) + "^" +
                               std::to_string(e) + " exceeds the bound 2^20");
      }
    }
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      r.terms_.push_back(Term{t.mono.pow(q), 0, ring_->field().pow(t.coef, q)});
    }
    return r;
  }

  Polynomial monic() const {
    Polynomial r(*this);
    vec::make_monic(r.terms_, ring_->field());
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && vec::equal(a.terms_, b.terms_);
  }

  std::string to_string() const;

 private:
  static void check(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  RingPtr ring_;
  Vec terms_;
};

inline std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& k = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = k.to_signed(terms_[i].coef);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit_mono = terms_[i].mono.is_one();
    if (c != 1 || unit_mono) {
      s += std::to_string(c);
      if (!unit_mono) s += '*';
    }
    if (!unit_mono) s += monomial_to_string(terms_[i].mono, *ring_);
  }
  return s;
}

namespace detail {

/// Recursive-descent parser for the polynomial grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := primary ['^' integer]
///   primary:= integer | variable-run | '(' expr ')'
/// A run of letters/digits that is not itself a variable name is split into
/// variable names by longest match ("x1x3" -> x1*x3).
class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text, std::size_t line, std::size_t col0)
      : ring_(std::move(ring)), text_(text), line_(line), col0_(col0) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + pos_ + 1, msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    if (!starts_factor()) fail("expected a term");
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent after '^'");
      if (pos_ - start > 8) fail("exponent too large");
      base = base.pow(std::stoull(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // Reduce digit by digit so arbitrarily long literals stay exact.
      std::uint64_t v = 0;
      for (std::size_t i = start; i < pos_; ++i) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[i] - '0')) % ring_->characteristic();
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    std::vector<std::size_t> vars;
    if (!split_word(word, 0, vars)) {
      pos_ = start;
      fail("unknown variable '" + std::string(word) + "'");
    }
    Monomial m(ring_->nvars());
    for (auto v : vars) m.set(v, m[v] + 1);
    return Polynomial::monomial(ring_, 1, m);
  }

  bool split_word(std::string_view word, std::size_t at, std::vector<std::size_t>& out) {
    if (at == word.size()) return true;
    for (std::size_t len = word.size() - at; len > 0; --len) {
      if (auto idx = ring_->index_of(word.substr(at, len))) {
        out.push_back(*idx);
        if (split_word(word, at + len, out)) return true;
        out.pop_back();
      }
    }
    return false;
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(RingPtr ring, std::string_view text, std::size_t line,
                                    std::size_t column_offset) {
  return detail::PolyParser(std::move(ring), text, line, column_offset).run();
}

}  // namespace lyu

#endif  // LYUBEZNIK_POLYNOMIAL_HPP_
