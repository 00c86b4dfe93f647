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

/**
 * @file equations.hpp
 * @brief Defining equations of orbit closures in the coordinates x_ij of
 * the generic e x f matrix X.
 *
 *  - rank_condition_generators: (r1+1)-minors of X, plus the (r2+1)-minors
 *    (symmetric) or principal (r2+2)-Pfaffians (alternating) of X K X^t.
 *  - component_generators: for a symmetric form with f even, the two
 *    components of {rank <= f/2, psi = 0} are cut out by the entries of
 *    X K X^t together with the projections of the maximal-minor vectors
 *    onto one eigenspace of the star operator on wedge^{f/2} F.
 *
 * Polynomials are stored fully expanded.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isodet/forms.hpp"
#include "isodet/linalg.hpp"
#include "isodet/polynomial.hpp"

namespace isodet {

struct GeneratorLabel {
  enum class Kind { minor, psi_minor, psi_pfaffian, quadratic_invariant,
                    component };

  Kind kind = Kind::minor;
  std::vector<std::size_t> rows;  ///< T (row subset / first index)
  std::vector<std::size_t> cols;  ///< S (column subset / second index)
  std::optional<Sign> sign;       ///< component only
  std::size_t eigen_index = 0;    ///< component only: coordinate e_S

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) =
      default;
};

/// minor(T=[0,1],S=[1,2]), psi-minor(...), psi-pfaffian(S=[..]),
/// quadratic-invariant(i,j), component(+,T=[..],eigen=k).
std::string to_string(const GeneratorLabel& label);

template <ExactField F>
struct GeneratorSet {
  std::vector<Polynomial<F>> polynomials;
  std::vector<GeneratorLabel> labels;

  std::size_t size() const noexcept { return polynomials.size(); }
  bool empty() const noexcept { return polynomials.empty(); }

  void push(Polynomial<F> p, GeneratorLabel label) {
    polynomials.push_back(std::move(p));
    labels.push_back(std::move(label));
  }

  void append(const GeneratorSet& other) {
    for (std::size_t i = 0; i < other.size(); ++i)
      push(other.polynomials[i], other.labels[i]);
  }
};

template <ExactField F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

// ---------------------------------------------------------------------------
// Polynomial matrix helpers

namespace detail {

template <ExactField F>
Polynomial<F> poly_det(const PolyMatrix<F>& m, const F& field,
                       std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(field, nvars, field.one());
  if (n == 1) return m[0][0];
  Polynomial<F> acc(field, nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<F> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<F>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const Polynomial<F> term = m[0][j] * poly_det(sub, field, nvars);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Expansion along the first row:
/// pf(A) = sum_{j>=1} (-1)^(j+1) a_0j pf(A without rows/cols 0, j).
template <ExactField F>
Polynomial<F> poly_pfaffian(const PolyMatrix<F>& m, const F& field,
                            std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(field, nvars, field.one());
  Polynomial<F> acc(field, nvars);
  for (std::size_t j = 1; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<F> sub;
    for (std::size_t i = 1; i < n; ++i) {
      if (i == j) continue;
      std::vector<Polynomial<F>> row;
      for (std::size_t k = 1; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const Polynomial<F> term = m[0][j] * poly_pfaffian(sub, field, nvars);
    if (j % 2 == 1) acc += term;
    else acc -= term;
  }
  return acc;
}

template <ExactField F>
PolyMatrix<F> poly_submatrix(const PolyMatrix<F>& m,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  PolyMatrix<F> out;
  for (auto i : rows) {
    std::vector<Polynomial<F>> row;
    for (auto j : cols) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

/// Sign of the permutation listing S then its complement, both increasing.
inline bool shuffle_is_odd(const std::vector<std::size_t>& s) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i) inversions += s[i] - i;
  return inversions % 2 == 1;
}

inline std::vector<std::size_t> complement(const std::vector<std::size_t>& s,
                                           std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) ++k;
    else out.push_back(i);
  }
  return out;
}

}  // namespace detail

/// The e x f matrix of coordinate functions x_ij (variable index i*f + j).
template <ExactField F>
PolyMatrix<F> generic_matrix(const SpaceConfig<F>& config) {
  const std::size_t e = config.e(), f = config.f();
  PolyMatrix<F> x;
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<Polynomial<F>> row;
    for (std::size_t j = 0; j < f; ++j)
      row.push_back(Polynomial<F>::variable(config.field(), e * f, i * f + j));
    x.push_back(std::move(row));
  }
  return x;
}

/// Entries of X K X^t.
template <ExactField F>
PolyMatrix<F> generic_psi(const SpaceConfig<F>& config) {
  const std::size_t e = config.e(), f = config.f();
  const auto& field = config.field();
  const auto& k = config.form().gram();
  const auto x = generic_matrix(config);
  // XK first (linear), then (XK) X^t.
  PolyMatrix<F> xk(e, std::vector<Polynomial<F>>(f, Polynomial<F>(field, e * f)));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < f; ++j)
      for (std::size_t l = 0; l < f; ++l)
        if (!(k(l, j) == field.zero())) xk[i][j] += k(l, j) * x[i][l];
  PolyMatrix<F> out(e, std::vector<Polynomial<F>>(e, Polynomial<F>(field, e * f)));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      for (std::size_t l = 0; l < f; ++l) out[i][j] += xk[i][l] * x[j][l];
  return out;
}

// ---------------------------------------------------------------------------
// Star operator on wedge^{f/2} F

template <ExactField F>
struct StarOperator {
  std::size_t f = 0;
  std::vector<std::vector<std::size_t>> basis;  ///< f/2-subsets, lex order
  Matrix<F> matrix;
  typename F::Scalar mu_squared;  ///< (-1)^{f/2} det K
  typename F::Scalar mu;          ///< square root of mu_squared

  std::size_t index_of(const std::vector<std::size_t>& s) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == s) return i;
    fail(ErrorCode::IndexOutOfRange, "subset not in basis");
  }

  /// (I + c * star) / 2.
  Matrix<F> projector(const typename F::Scalar& c) const {
    const auto& field = matrix.field();
    const typename F::Scalar half = field.one() / field.from_int(2);
    return half * (Matrix<F>::identity(field, basis.size()) + c * matrix);
  }
};

/// Star operator defined by duality: for f/2-subsets S, T the coefficient
/// of e_{S^c} in star(e_T) is sign(S, S^c) * det K[S, T], where sign(S, S^c)
/// is the sign of the shuffle permutation. Left unnormalized:
/// star^2 = (-1)^{f/2} det(K) * id.
template <ExactField F>
StarOperator<F> star_operator(const BilinearForm<F>& form) {
  if (form.kind() != FormKind::symmetric)
    fail(ErrorCode::WrongKind, "star operator needs a symmetric form");
  if (form.dim() % 2 != 0)
    fail(ErrorCode::OddDimension, "star operator needs f even");
  const auto& field = form.field();
  const std::size_t f = form.dim(), h = f / 2;
  StarOperator<F> star{f, combinations(f, h), Matrix<F>(field, 0, 0),
                       field.zero(), field.zero()};
  const std::size_t n = star.basis.size();
  star.matrix = Matrix<F>(field, n, n);
  for (std::size_t si = 0; si < n; ++si) {
    const auto& s = star.basis[si];
    const std::size_t target = star.index_of(detail::complement(s, f));
    const bool odd = detail::shuffle_is_odd(s);
    for (std::size_t ti = 0; ti < n; ++ti) {
      auto v = det(form.gram().submatrix(s, star.basis[ti]));
      star.matrix(target, ti) = odd ? -v : v;
    }
  }
  star.mu_squared = det(form.gram());
  if (h % 2 == 1) star.mu_squared = -star.mu_squared;
  const auto mu = field.sqrt(star.mu_squared);
  if (!mu)
    fail(ErrorCode::EigenvalueNotInField,
         "star eigenvalue sqrt(" + field.render(star.mu_squared) +
             ") is not in " + field_name(field.descriptor()) +
             "; use a quadratic extension (--field p=<prime>,ext=2)");
  star.mu = *mu;
  return star;
}

/// Eigenvalue of the star operator on the wedge of the "+" family: the
/// reference L0 = span(a_1..a_{f/2}) when one exists over the field, else
/// the chosen square root mu.
template <ExactField F>
typename F::Scalar plus_family_eigenvalue(const StarOperator<F>& star,
                                          const SpaceConfig<F>& config) {
  if (!config.has_reference_lagrangian()) return star.mu;
  const auto& l0 = config.witt().a;
  const std::size_t h = config.f() / 2;
  std::vector<std::size_t> all_rows(h);
  for (std::size_t i = 0; i < h; ++i) all_rows[i] = i;
  Matrix<F> v(config.field(), star.basis.size(), 1);
  for (std::size_t s = 0; s < star.basis.size(); ++s)
    v(s, 0) = minor(l0, all_rows, star.basis[s]);
  const Matrix<F> image = star.matrix * v;
  for (std::size_t s = 0; s < star.basis.size(); ++s)
    if (!(v(s, 0) == config.field().zero())) return image(s, 0) / v(s, 0);
  fail(ErrorCode::DegenerateForm, "reference subspace has zero wedge");
}

// ---------------------------------------------------------------------------
// Generator sets

namespace detail {

template <ExactField F>
std::vector<typename F::Scalar> component_projector_row(
    const StarOperator<F>& star, const typename F::Scalar& kill_eigenvalue,
    std::size_t eigen_index) {
  // (I - lambda^{-1} star) / 2 vanishes on the lambda-eigenspace.
  const auto& field = star.matrix.field();
  const Matrix<F> p = star.projector(-(field.one() / kill_eigenvalue));
  return {p.row(eigen_index).begin(), p.row(eigen_index).end()};
}

template <ExactField F>
Polynomial<F> component_polynomial(const SpaceConfig<F>& config,
                                   const PolyMatrix<F>& x,
                                   const StarOperator<F>& star,
                                   const typename F::Scalar& plus_eigenvalue,
                                   Sign sign, const std::vector<std::size_t>& t,
                                   std::size_t eigen_index) {
  const typename F::Scalar kill =
      sign == Sign::plus ? plus_eigenvalue : typename F::Scalar(-plus_eigenvalue);
  const auto row = component_projector_row(star, kill, eigen_index);
  const auto& field = config.field();
  Polynomial<F> out(field, config.e() * config.f());
  for (std::size_t s = 0; s < star.basis.size(); ++s) {
    if (row[s] == field.zero()) continue;
    out += row[s] * poly_det(poly_submatrix(x, t, star.basis[s]), field,
                             config.e() * config.f());
  }
  return out;
}

/// Greedy linear independence over coefficient vectors.
template <ExactField F>
class IndependenceFilter {
 public:
  explicit IndependenceFilter(F field) : field_(std::move(field)) {}

  bool insert(const Polynomial<F>& p) {
    std::map<std::size_t, typename F::Scalar> v;
    for (const auto& [m, c] : p.terms()) v[column(m)] = c;
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const typename F::Scalar factor = it->second / row.at(pivot);
      for (const auto& [col, c] : row) {
        auto& slot = v[col];
        slot -= factor * c;
      }
      std::erase_if(v, [&](const auto& kv) { return kv.second == field_.zero(); });
    }
    if (v.empty()) return false;
    const std::size_t pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

 private:
  std::size_t column(const Monomial& m) {
    auto [it, inserted] = columns_.try_emplace(m, columns_.size());
    return it->second;
  }

  F field_;
  std::map<Monomial, std::size_t> columns_;
  // Keyed by pivot (smallest column); visiting pivots in increasing order
  // keeps already-cleared columns clear.
  std::map<std::size_t, std::map<std::size_t, typename F::Scalar>> rows_;
};

}  // namespace detail

/// Rebuilds the polynomial a label names.
template <ExactField F>
Polynomial<F> generator_from_label(const GeneratorLabel& label,
                                   const SpaceConfig<F>& config) {
  const auto& field = config.field();
  const std::size_t nvars = config.e() * config.f();
  using Kind = GeneratorLabel::Kind;
  switch (label.kind) {
    case Kind::minor:
      return detail::poly_det(
          detail::poly_submatrix(generic_matrix(config), label.rows,
                                 label.cols),
          field, nvars);
    case Kind::psi_minor:
      return detail::poly_det(
          detail::poly_submatrix(generic_psi(config), label.rows, label.cols),
          field, nvars);
    case Kind::psi_pfaffian:
      return detail::poly_pfaffian(
          detail::poly_submatrix(generic_psi(config), label.cols, label.cols),
          field, nvars);
    case Kind::quadratic_invariant:
      return generic_psi(config)[label.rows.at(0)][label.cols.at(0)];
    case Kind::component: {
      const auto star = star_operator(config.form());
      return detail::component_polynomial(
          config, generic_matrix(config), star,
          plus_family_eigenvalue(star, config), label.sign.value(), label.rows,
          label.eigen_index);
    }
  }
  fail(ErrorCode::InvalidParams, "unknown label kind");
}

/// Minors and Pfaffians for the rank conditions rank X <= r1,
/// rank X K X^t <= r2. Not defined for the reducible (f/2, 0) case.
template <ExactField F>
GeneratorSet<F> rank_condition_generators(const OrbitParams& params,
                                          const SpaceConfig<F>& config) {
  const auto shape = config.shape();
  if (is_exceptional_pair(params.r1, params.r2, shape))
    fail(ErrorCode::ExceptionalNeedsSign,
         to_string(params) + " has two components; use component generators");
  if (!is_valid(params, shape))
    fail(ErrorCode::InvalidParams, to_string(params));
  const std::size_t e = config.e(), f = config.f();
  const std::size_t nvars = e * f;
  const auto& field = config.field();
  GeneratorSet<F> out;
  using Kind = GeneratorLabel::Kind;

  const std::size_t t = params.r1 + 1;
  if (t <= std::min(e, f)) {
    const auto x = generic_matrix(config);
    for (const auto& rows : combinations(e, t))
      for (const auto& cols : combinations(f, t)) {
        auto p = detail::poly_det(detail::poly_submatrix(x, rows, cols), field,
                                  nvars);
        if (!p.is_zero()) out.push(std::move(p), {Kind::minor, rows, cols, {}, 0});
      }
  }

  const auto psi_x = generic_psi(config);
  if (config.kind() == FormKind::symmetric) {
    const std::size_t s = params.r2 + 1;
    if (s <= e) {
      const auto subsets = combinations(e, s);
      // psi is symmetric, so minor(T, S) = minor(S, T): keep T <= S.
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) {
          auto p = detail::poly_det(
              detail::poly_submatrix(psi_x, subsets[a], subsets[b]), field,
              nvars);
          if (!p.is_zero())
            out.push(std::move(p), {Kind::psi_minor, subsets[a], subsets[b], {}, 0});
        }
    }
  } else {
    const std::size_t s = params.r2 + 2;
    if (s <= e) {
      for (const auto& idx : combinations(e, s)) {
        auto p = detail::poly_pfaffian(
            detail::poly_submatrix(psi_x, idx, idx), field, nvars);
        if (!p.is_zero()) out.push(std::move(p), {Kind::psi_pfaffian, {}, idx, {}, 0});
      }
    }
  }
  return out;
}

/// W (distinct entries of X K X^t) together with V_sign, the projections of
/// the maximal-minor vectors sum_S minor(T, S) e_S onto the star eigenspace
/// opposite to the sign's family. Pruned to a linearly independent subset.
template <ExactField F>
GeneratorSet<F> component_generators(Sign sign, const SpaceConfig<F>& config) {
  if (config.kind() != FormKind::symmetric)
    fail(ErrorCode::WrongKind, "component equations need a symmetric form");
  if (config.f() % 2 != 0)
    fail(ErrorCode::OddDimension, "component equations need f even");
  const std::size_t h = config.f() / 2;
  if (h > config.e())
    fail(ErrorCode::InvalidParams,
         "(f/2, 0) is not an orbit when f/2 > e");
  const auto star = star_operator(config.form());
  const auto plus = plus_family_eigenvalue(star, config);
  const auto& field = config.field();
  const std::size_t e = config.e();
  using Kind = GeneratorLabel::Kind;

  GeneratorSet<F> out;
  const auto psi_x = generic_psi(config);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i; j < e; ++j)
      if (!psi_x[i][j].is_zero())
        out.push(psi_x[i][j], {Kind::quadratic_invariant, {i}, {j}, {}, 0});

  const auto x = generic_matrix(config);
  detail::IndependenceFilter<F> filter(field);
  for (const auto& t : combinations(e, h))
    for (std::size_t s = 0; s < star.basis.size(); ++s) {
      auto p = detail::component_polynomial(config, x, star, plus, sign, t, s);
      if (p.is_zero() || !filter.insert(p)) continue;
      out.push(std::move(p), {Kind::component, t, {}, sign, s});
    }
  return out;
}

/// Generators of the orbit closure: component equations for the signed
/// (f/2, 0) classes, rank conditions otherwise.
template <ExactField F>
GeneratorSet<F> orbit_generators(const OrbitParams& params,
                                 const SpaceConfig<F>& config) {
  if (params.sign) {
    if (!is_valid(params, config.shape()))
      fail(ErrorCode::InvalidParams, to_string(params));
    return component_generators(*params.sign, config);
  }
  return rank_condition_generators(params, config);
}

// ---------------------------------------------------------------------------
// Evaluation

template <ExactField F>
typename F::Scalar evaluate(const Polynomial<F>& p, const Matrix<F>& phi) {
  if (phi.rows() * phi.cols() != p.nvars())
    fail(ErrorCode::DimensionMismatch,
         "polynomial has " + std::to_string(p.nvars()) + " variables, Phi is " +
             Matrix<F>::shape(phi));
  return p.evaluate(phi.data());
}

/// True when every generator vanishes at phi.
template <ExactField F>
bool evaluate(const GeneratorSet<F>& set, const Matrix<F>& phi) {
  for (const auto& p : set.polynomials)
    if (!(evaluate(p, phi) == phi.field().zero())) return false;
  return true;
}

/// Compiled generator set for sweeps; evaluation stops at the first
/// non-vanishing generator.
template <ExactField F>
class CompiledGenerators {
 public:
  explicit CompiledGenerators(const GeneratorSet<F>& set) {
    for (const auto& p : set.polynomials) polys_.emplace_back(p);
  }

  bool all_vanish(std::span<const typename F::Scalar> point) const {
    for (const auto& p : polys_)
      if (!p.vanishes_at(point)) return false;
    return true;
  }

  std::size_t size() const noexcept { return polys_.size(); }

 private:
  std::vector<CompiledPolynomial<F>> polys_;
};

}  // namespace isodet
