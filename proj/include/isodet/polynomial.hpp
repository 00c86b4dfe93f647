// Copyright 2026 The isodet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "isodet/fields.hpp"

namespace isodet {

using Monomial = std::vector<std::uint8_t>;

inline std::size_t total_degree(const Monomial& m) {
  std::size_t d = 0;
  for (auto x : m) d += x;
  return d;
}

/// Graded lex, largest first: higher degree first, then lexicographically
/// larger exponent vectors (x11 > x12 > ...) first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Variable name for coordinate index i of an e x f matrix: x<row><col>,
/// 1-based, with underscores once an index needs two digits.
std::string variable_name(std::size_t index, std::size_t f);

/// Sign-aware rendering of a coefficient: F_p residues above p/2 print as
/// negatives, Q prints its sign, F_{p^2} is never negative.
template <ExactField F>
std::pair<bool, std::string> signed_render(const F& field,
                                           const typename F::Scalar& c) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (c.value() > field.p() / 2)
      return {true, std::to_string(field.p() - c.value())};
    return {false, field.render(c)};
  } else if constexpr (std::is_same_v<F, RationalField>) {
    if (sgn(c) < 0) return {true, field.render(-c)};
    return {false, field.render(c)};
  } else {
    return {false, field.render(c)};
  }
}

/// Sparse polynomial in a fixed number of variables; zero coefficients are
/// never stored.
template <ExactField F>
class Polynomial {
 public:
  using Scalar = typename F::Scalar;
  using Terms = std::map<Monomial, Scalar, GrlexDescending>;

  Polynomial(F field, std::size_t nvars)
      : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial variable(const F& field, std::size_t nvars,
                             std::size_t index) {
    Polynomial p(field, nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), field.one());
    return p;
  }

  static Polynomial constant(const F& field, std::size_t nvars,
                             const Scalar& c) {
    Polynomial p(field, nvars);
    if (!(c == field.zero())) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
  }

  const F& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = degree();
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c == field_.zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == field_.zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    Polynomial r(a.field_, a.nvars_);
    if (s == a.field_.zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.field_, a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t k = 0; k < a.nvars_; ++k)
          m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    auto acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      auto t = c;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (std::uint8_t e = 0; e < m[k]; ++e) t *= point[k];
      acc += t;
    }
    return acc;
  }

  /// "x11*x22 - x12*x21", powers as "x11^2"; f names the variables.
  std::string render(std::size_t f) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      auto [negative, mag] = signed_render(field_, c);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variable_name(k, f);
        if (m[k] > 1) mono += "^" + std::to_string(m[k]);
      }
      const bool unit = mag == "1";
      if (mono.empty()) {
        out += mag;
      } else if (unit) {
        out += mono;
      } else {
        const bool wrap = mag.find_first_of("+*") != std::string::npos;
        out += (wrap ? "(" + mag + ")" : mag) + "*" + mono;
      }
    }
    return out;
  }

 private:
  F field_;
  std::size_t nvars_;
  Terms terms_;
};

/// Flat evaluation form of a polynomial: each term is a coefficient and the
/// list of variable indices to multiply (with repetition).
template <ExactField F>
class CompiledPolynomial {
 public:
  using Scalar = typename F::Scalar;

  explicit CompiledPolynomial(const Polynomial<F>& p) : zero_(p.field().zero()) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c, {}};
      for (std::size_t k = 0; k < m.size(); ++k)
        for (std::uint8_t e = 0; e < m[k]; ++e)
          t.vars.push_back(static_cast<std::uint16_t>(k));
      terms_.push_back(std::move(t));
    }
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    Scalar acc = zero_;
    for (const auto& t : terms_) {
      Scalar v = t.coeff;
      for (auto k : t.vars) v *= point[k];
      acc += v;
    }
    return acc;
  }

  bool vanishes_at(std::span<const Scalar> point) const {
    return evaluate(point) == zero_;
  }

 private:
  struct Term {
    Scalar coeff;
    std::vector<std::uint16_t> vars;
  };
  Scalar zero_;
  std::vector<Term> terms_;
};

}  // namespace isodet
