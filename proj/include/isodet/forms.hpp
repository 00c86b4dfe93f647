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
 * @file forms.hpp
 * @brief Bilinear forms on F, the map psi, orbit classification and
 * representatives, and the isometry-group machinery.
 *
 * Conventions. An element of E (x) F is stored as an e x f matrix Phi whose
 * rows are indexed by a basis of E; the row space of Phi is the image in F.
 * The group acts by Phi -> A Phi B^t with A in GL(E) and B^t K B = K, and
 * psi(Phi) = Phi K Phi^t, so psi(A Phi B^t) = A psi(Phi) A^t.
 *
 * A Witt basis of F is a list of rows a_1..a_m, b_1..b_m with
 * beta(a_i, b_j) = delta_ij and all a's and b's isotropic, followed by an
 * orthogonal basis of the anisotropic remainder. For the default split
 * Gram matrices it is the standard one:
 *   symmetric (antidiagonal ones):  a_i = e_i, b_i = e_{f+1-i}, c = e_{m+1}
 *   alternating (blocks [[0,1],[-1,0]]):  a_i = e_{2i-1}, b_i = e_{2i}
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isodet/linalg.hpp"
#include "isodet/matrix.hpp"
#include "isodet/orbit_params.hpp"
#include "isodet/random.hpp"

namespace isodet {

template <ExactField F>
class BilinearForm {
 public:
  /// Validates: square, nondegenerate, symmetric or alternating as declared,
  /// alternating forms have even size.
  BilinearForm(FormKind kind, Matrix<F> gram)
      : kind_(kind), gram_(std::move(gram)) {
    if (!gram_.is_square())
      fail(ErrorCode::InvalidForm, "Gram matrix must be square");
    if (kind_ == FormKind::symmetric && !is_symmetric(gram_))
      fail(ErrorCode::InvalidForm, "Gram matrix is not symmetric");
    if (kind_ == FormKind::alternating) {
      if (gram_.rows() % 2 != 0)
        fail(ErrorCode::InvalidForm, "alternating form needs even dimension");
      if (!is_alternating(gram_))
        fail(ErrorCode::InvalidForm, "Gram matrix is not alternating");
    }
    if (det(gram_) == gram_.field().zero())
      fail(ErrorCode::DegenerateForm, "Gram matrix is singular");
  }

  /// Maximal Witt index form: antidiagonal ones (symmetric) or
  /// block-diagonal [[0,1],[-1,0]] (alternating).
  static BilinearForm split(const F& field, FormKind kind, std::size_t f) {
    Matrix<F> g(field, f, f);
    if (kind == FormKind::symmetric) {
      for (std::size_t i = 0; i < f; ++i) g(i, f - 1 - i) = field.one();
    } else {
      for (std::size_t i = 0; i + 1 < f; i += 2) {
        g(i, i + 1) = field.one();
        g(i + 1, i) = -field.one();
      }
    }
    return BilinearForm(kind, std::move(g));
  }

  /// Orthonormal symmetric form.
  static BilinearForm identity(const F& field, std::size_t f) {
    return BilinearForm(FormKind::symmetric, Matrix<F>::identity(field, f));
  }

  FormKind kind() const noexcept { return kind_; }
  const Matrix<F>& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const F& field() const noexcept { return gram_.field(); }

  bool is_default_split() const {
    return gram_ == split(field(), kind_, dim()).gram_;
  }

  /// beta(u, v) = u^t K v.
  typename F::Scalar apply(std::span<const typename F::Scalar> u,
                           std::span<const typename F::Scalar> v) const {
    auto acc = field().zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == field().zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) acc += u[i] * gram_(i, j) * v[j];
    }
    return acc;
  }

 private:
  FormKind kind_;
  Matrix<F> gram_;
};

template <ExactField F>
struct WittBasis {
  std::size_t index = 0;  ///< Witt index m
  Matrix<F> a;            ///< m x f, rows a_1..a_m
  Matrix<F> b;            ///< m x f, rows b_1..b_m
  Matrix<F> anisotropic;  ///< orthogonal basis of the remainder
};

namespace detail {

template <ExactField F>
using Vec = std::vector<typename F::Scalar>;

template <ExactField F>
Vec<F> combine(const F& field, const Vec<F>& coeffs, const Matrix<F>& rows) {
  Vec<F> out(rows.cols(), field.zero());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    if (coeffs[k] == field.zero()) continue;
    for (std::size_t j = 0; j < rows.cols(); ++j)
      out[j] += coeffs[k] * rows(k, j);
  }
  return out;
}

template <ExactField F>
Matrix<F> rows_matrix(const F& field, const std::vector<Vec<F>>& rows,
                      std::size_t cols) {
  Matrix<F> m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

/// Orthogonalizes the coordinate basis w.r.t. a symmetric Gram matrix G.
/// Returns either an isotropic nonzero coordinate vector met on the way, or
/// an orthogonal basis (as coordinate vectors) together with their norms.
template <ExactField F>
struct Orthogonalization {
  std::optional<Vec<F>> isotropic;
  std::vector<Vec<F>> basis;
  Vec<F> norms;
};

template <ExactField F>
Orthogonalization<F> orthogonalize(const Matrix<F>& g) {
  const auto& field = g.field();
  const std::size_t n = g.rows();
  auto form = [&](const Vec<F>& u, const Vec<F>& v) {
    auto acc = field.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += u[i] * g(i, j) * v[j];
    return acc;
  };
  Orthogonalization<F> out;
  for (std::size_t k = 0; k < n; ++k) {
    Vec<F> v(n, field.zero());
    v[k] = field.one();
    for (std::size_t t = 0; t < out.basis.size(); ++t) {
      const typename F::Scalar c = form(v, out.basis[t]) / out.norms[t];
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * out.basis[t][i];
    }
    const auto nv = form(v, v);
    if (nv == field.zero()) {
      out.isotropic = v;
      return out;
    }
    out.basis.push_back(std::move(v));
    out.norms.push_back(nv);
  }
  return out;
}

/// Candidate values for a bounded search over the field: every element of a
/// finite field, small fractions for Q.
template <ExactField F>
std::vector<typename F::Scalar> search_values(const F& field) {
  std::vector<typename F::Scalar> out;
  if constexpr (F::is_finite) {
    for (std::uint64_t i = 0; i < field.size(); ++i)
      out.push_back(field.element(i));
  } else {
    for (long num = -24; num <= 24; ++num)
      for (long den = 1; den <= 6; ++den)
        out.push_back(field.from_int(num) / field.from_int(den));
  }
  return out;
}

/// Nonzero isotropic coordinate vector for a nondegenerate symmetric G.
template <ExactField F>
std::optional<Vec<F>> find_isotropic(const Matrix<F>& g) {
  const auto& field = g.field();
  const std::size_t n = g.rows();
  auto orth = orthogonalize(g);
  if (orth.isotropic) return orth.isotropic;
  const auto& u = orth.basis;
  const auto& d = orth.norms;
  auto mix = [&](std::initializer_list<std::pair<std::size_t,
                                                 typename F::Scalar>> terms) {
    Vec<F> v(n, field.zero());
    for (const auto& [idx, c] : terms)
      for (std::size_t i = 0; i < n; ++i) v[i] += c * u[idx][i];
    return v;
  };
  // s^2 d_i + d_j = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto s = field.sqrt(-d[j] / d[i])) return mix({{i, *s}, {j, field.one()}});
  if (n < 3) return std::nullopt;
  // x^2 d_0 + y^2 d_1 + d_2 = 0; always solvable over a finite field.
  for (const auto& x : search_values(field)) {
    if (auto y = field.sqrt(-(d[2] + x * x * d[0]) / d[1]))
      return mix({{0, x}, {1, *y}, {2, field.one()}});
  }
  return std::nullopt;
}

}  // namespace detail

/// Computes a Witt basis (see file comment). Alternating forms always split
/// completely. For symmetric forms over a finite field the index is
/// floor(f/2) or floor(f/2) - 1; over Q the isotropic search is bounded, so
/// the reported index is a lower bound.
template <ExactField F>
WittBasis<F> witt_basis(const BilinearForm<F>& form) {
  const auto& field = form.field();
  const std::size_t f = form.dim();
  const std::size_t half = f / 2;
  WittBasis<F> out{0, Matrix<F>(field, 0, f), Matrix<F>(field, 0, f),
                   Matrix<F>(field, 0, f)};

  if (form.is_default_split()) {
    out.index = half;
    out.a = Matrix<F>(field, half, f);
    out.b = Matrix<F>(field, half, f);
    for (std::size_t i = 0; i < half; ++i) {
      if (form.kind() == FormKind::symmetric) {
        out.a(i, i) = field.one();
        out.b(i, f - 1 - i) = field.one();
      } else {
        out.a(i, 2 * i) = field.one();
        out.b(i, 2 * i + 1) = field.one();
      }
    }
    if (f % 2 == 1) {
      out.anisotropic = Matrix<F>(field, 1, f);
      out.anisotropic(0, half) = field.one();
    }
    return out;
  }

  using V = detail::Vec<F>;
  std::vector<V> as, bs;
  Matrix<F> span = Matrix<F>::identity(field, f);  // rows: current subspace
  while (span.rows() >= 2) {
    const Matrix<F> g = span * form.gram() * span.transpose();
    std::optional<V> coords;
    if (form.kind() == FormKind::alternating) {
      coords = V(span.rows(), field.zero());
      (*coords)[0] = field.one();
    } else {
      coords = detail::find_isotropic(g);
    }
    if (!coords) break;
    const V v = detail::combine(field, *coords, span);
    // Partner: a row of span pairing nontrivially with v.
    std::size_t k = 0;
    while (k < span.rows() && form.apply(v, span.row(k)) == field.zero()) ++k;
    V w(span.row(k).begin(), span.row(k).end());
    const typename F::Scalar scale = field.one() / form.apply(v, w);
    for (auto& x : w) x *= scale;
    if (form.kind() == FormKind::symmetric) {
      const typename F::Scalar c = form.apply(w, w) / field.from_int(2);
      for (std::size_t j = 0; j < f; ++j) w[j] -= c * v[j];
    }
    as.push_back(v);
    bs.push_back(w);
    // Orthogonal complement of span(v, w) inside span.
    Matrix<F> constraints(field, 2, span.rows());
    for (std::size_t r = 0; r < span.rows(); ++r) {
      constraints(0, r) = form.apply(span.row(r), v);
      constraints(1, r) = form.apply(span.row(r), w);
    }
    const auto kernel = kernel_basis(constraints);
    Matrix<F> next(field, kernel.size(), f);
    for (std::size_t r = 0; r < kernel.size(); ++r) {
      const V row = detail::combine(field, kernel[r], span);
      for (std::size_t j = 0; j < f; ++j) next(r, j) = row[j];
    }
    span = std::move(next);
  }
  out.index = as.size();
  out.a = detail::rows_matrix(field, as, f);
  out.b = detail::rows_matrix(field, bs, f);
  if (span.rows() > 0) {
    const Matrix<F> g = span * form.gram() * span.transpose();
    const auto orth = detail::orthogonalize(g);
    std::vector<V> rows;
    for (const auto& c : orth.basis)
      rows.push_back(detail::combine(field, c, span));
    out.anisotropic = detail::rows_matrix(field, rows, f);
  }
  return out;
}

/// (e, form) with the derived data every orbit computation needs: the Witt
/// basis and a basis of the Lie algebra of the isometry group.
template <ExactField F>
class SpaceConfig {
 public:
  SpaceConfig(std::size_t e, BilinearForm<F> form)
      : e_(e),
        form_(std::move(form)),
        witt_(witt_basis(form_)),
        lie_(compute_lie_basis(form_)) {
    validate_shape(shape());
  }

  std::size_t e() const noexcept { return e_; }
  std::size_t f() const noexcept { return form_.dim(); }
  FormKind kind() const noexcept { return form_.kind(); }
  const F& field() const noexcept { return form_.field(); }
  const BilinearForm<F>& form() const noexcept { return form_; }
  const WittBasis<F>& witt() const noexcept { return witt_; }
  const std::vector<Matrix<F>>& lie() const noexcept { return lie_; }
  SpaceShape shape() const { return {e_, form_.dim(), form_.kind()}; }

  /// Whether the (f/2, 0) classes can be told apart (a reference maximal
  /// isotropic subspace L0 = span(a_1..a_{f/2}) exists).
  bool has_reference_lagrangian() const {
    return f() % 2 == 0 && witt_.index == f() / 2;
  }

  static std::vector<Matrix<F>> compute_lie_basis(const BilinearForm<F>& form);

 private:
  std::size_t e_;
  BilinearForm<F> form_;
  WittBasis<F> witt_;
  std::vector<Matrix<F>> lie_;
};

/// Basis of {b : b^t K + K b = 0}; dimension f(f+1)/2 (sp) or f(f-1)/2 (so).
template <ExactField F>
std::vector<Matrix<F>> SpaceConfig<F>::compute_lie_basis(
    const BilinearForm<F>& form) {
  const auto& k = form.gram();
  const auto& field = form.field();
  const std::size_t f = form.dim();
  // Row (r, s) of the system is the (r, s) entry of b^t K + K b, column
  // (m, n) is the unknown b_mn.
  Matrix<F> system(field, f * f, f * f);
  for (std::size_t r = 0; r < f; ++r)
    for (std::size_t s = 0; s < f; ++s)
      for (std::size_t m = 0; m < f; ++m) {
        system(r * f + s, m * f + r) += k(m, s);  // (b^t K)_rs
        system(r * f + s, m * f + s) += k(r, m);  // (K b)_rs
      }
  std::vector<Matrix<F>> basis;
  for (const auto& v : kernel_basis(system)) {
    Matrix<F> b(field, f, f);
    for (std::size_t idx = 0; idx < f * f; ++idx) b(idx / f, idx % f) = v[idx];
    basis.push_back(std::move(b));
  }
  return basis;
}

template <ExactField F>
std::vector<Matrix<F>> lie_basis(const BilinearForm<F>& form) {
  return SpaceConfig<F>::compute_lie_basis(form);
}

// ---------------------------------------------------------------------------
// psi and classification

template <ExactField F>
Matrix<F> psi(const Matrix<F>& phi, const BilinearForm<F>& form) {
  if (phi.cols() != form.dim())
    fail(ErrorCode::DimensionMismatch,
         "Phi has " + std::to_string(phi.cols()) + " columns, form has size " +
             std::to_string(form.dim()));
  return phi * form.gram() * phi.transpose();
}

template <ExactField F>
std::size_t isotropic_rank(const Matrix<F>& phi, const BilinearForm<F>& form) {
  return rank(psi(phi, form));
}

namespace detail {
template <ExactField F>
void check_phi(const Matrix<F>& phi, const SpaceConfig<F>& config) {
  if (phi.rows() != config.e() || phi.cols() != config.f())
    fail(ErrorCode::DimensionMismatch,
         "Phi is " + Matrix<F>::shape(phi) + ", expected " +
             std::to_string(config.e()) + "x" + std::to_string(config.f()));
  if (!(phi.field() == config.field()))
    fail(ErrorCode::FieldMismatch, "Phi lives in a different field");
}
}  // namespace detail

/// Family of a maximal isotropic row space L: + iff f/2 - dim(L ∩ L0) is
/// even. Requires rank(phi) = f/2 and psi(phi) = 0.
template <ExactField F>
Sign lagrangian_family(const Matrix<F>& phi, const SpaceConfig<F>& config) {
  if (!config.has_reference_lagrangian())
    fail(ErrorCode::SignUndefinedForForm,
         "no maximal isotropic reference subspace over this field");
  const std::size_t half = config.f() / 2;
  const std::size_t meet = row_space_intersection_dim(phi, config.witt().a);
  return (half - meet) % 2 == 0 ? Sign::plus : Sign::minus;
}

template <ExactField F>
OrbitParams classify(const Matrix<F>& phi, const SpaceConfig<F>& config) {
  detail::check_phi(phi, config);
  OrbitParams p;
  p.r1 = rank(phi);
  p.r2 = isotropic_rank(phi, config.form());
  if (is_exceptional_pair(p.r1, p.r2, config.shape()))
    p.sign = lagrangian_family(phi, config);
  return p;
}

/// Orbit representative, built in the Witt basis:
///   symmetric:   a_1..a_k (k = r1 - r2), then r2 mutually orthogonal
///                anisotropic vectors a_j + b_j, a_j - b_j (j > k), then the
///                anisotropic remainder;
///   alternating: a_1..a_k, then pairs (a_j, b_j) for j = k+1..k+r2/2;
/// remaining rows zero. The "-" exceptional class swaps a_{f/2} for b_{f/2}.
template <ExactField F>
Matrix<F> representative(const OrbitParams& params,
                         const SpaceConfig<F>& config) {
  const auto shape = config.shape();
  if (!is_valid(params, shape))
    fail(ErrorCode::InvalidParams, to_string(params));
  const auto& field = config.field();
  const auto& witt = config.witt();
  const std::size_t f = config.f();
  const std::size_t k = params.r1 - params.r2;
  const std::size_t m = witt.index;

  std::vector<detail::Vec<F>> rows;
  auto a = [&](std::size_t j) {
    return detail::Vec<F>(witt.a.row(j).begin(), witt.a.row(j).end());
  };
  auto b = [&](std::size_t j) {
    return detail::Vec<F>(witt.b.row(j).begin(), witt.b.row(j).end());
  };
  auto insufficient = [&] {
    fail(ErrorCode::InsufficientWittIndex,
         to_string(params) + " needs more isotropic vectors than the Witt "
                             "index " + std::to_string(m) + " provides");
  };
  if (k > m) insufficient();
  for (std::size_t j = 0; j < k; ++j) rows.push_back(a(j));

  if (config.kind() == FormKind::symmetric) {
    std::vector<detail::Vec<F>> aniso;
    for (std::size_t j = k; j < m; ++j) {
      auto plus = a(j), minus = a(j);
      const auto bj = b(j);
      for (std::size_t t = 0; t < f; ++t) {
        plus[t] += bj[t];
        minus[t] -= bj[t];
      }
      aniso.push_back(std::move(plus));
      aniso.push_back(std::move(minus));
    }
    for (std::size_t r = 0; r < witt.anisotropic.rows(); ++r)
      aniso.emplace_back(witt.anisotropic.row(r).begin(),
                         witt.anisotropic.row(r).end());
    if (params.r2 > aniso.size()) insufficient();
    for (std::size_t j = 0; j < params.r2; ++j) rows.push_back(aniso[j]);
    if (params.sign == Sign::minus) rows[f / 2 - 1] = b(f / 2 - 1);
  } else {
    if (k + params.r2 / 2 > m) insufficient();
    for (std::size_t j = k; j < k + params.r2 / 2; ++j) {
      rows.push_back(a(j));
      rows.push_back(b(j));
    }
  }

  Matrix<F> phi(field, config.e(), f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < f; ++j) phi(i, j) = rows[i][j];
  return phi;
}

// ---------------------------------------------------------------------------
// Constructive congruence: S = A K B^t + B K A^t

/// Solves S = A K B^t + B K A^t for B, A of full row rank. Alternating:
/// S = X - X^t with X the strict upper triangle of S, B = X Y where Y is a
/// left inverse of K A^t. Symmetric: B = (1/2) S Y.
template <ExactField F>
Matrix<F> solve_congruence(const Matrix<F>& s, const Matrix<F>& a,
                           const BilinearForm<F>& form) {
  const auto& field = form.field();
  if (a.cols() != form.dim())
    fail(ErrorCode::DimensionMismatch,
         "A has " + std::to_string(a.cols()) + " columns, form has size " +
             std::to_string(form.dim()));
  if (s.rows() != a.rows() || s.cols() != a.rows())
    fail(ErrorCode::DimensionMismatch,
         "S must be " + std::to_string(a.rows()) + "x" +
             std::to_string(a.rows()));
  if (form.kind() == FormKind::alternating && !is_alternating(s))
    fail(ErrorCode::SymmetryMismatch, "S must be skew with zero diagonal");
  if (form.kind() == FormKind::symmetric && !is_symmetric(s))
    fail(ErrorCode::SymmetryMismatch, "S must be symmetric");
  if (rank(a) != a.rows())
    fail(ErrorCode::RankDeficient, "A must have full row rank");

  const Matrix<F> y = left_inverse(form.gram() * a.transpose());
  if (form.kind() == FormKind::alternating) {
    Matrix<F> x(field, s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = i + 1; j < s.cols(); ++j) x(i, j) = s(i, j);
    return x * y;
  }
  return (field.one() / field.from_int(2)) * (s * y);
}

// ---------------------------------------------------------------------------
// Tangent space of an orbit

/// dim of the orbit through phi: rank of (a, b) -> a Phi + Phi b^t over
/// gl(E) x lie(form), assembled as an (e^2 + dim lie) x (e f) matrix.
template <ExactField F>
std::size_t tangent_dimension(const Matrix<F>& phi,
                              const SpaceConfig<F>& config) {
  detail::check_phi(phi, config);
  const std::size_t e = config.e(), f = config.f();
  const auto& field = config.field();
  Matrix<F> span(field, e * e + config.lie().size(), e * f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j, ++row)
      // E_ij Phi puts row j of Phi into row i.
      for (std::size_t c = 0; c < f; ++c) span(row, i * f + c) = phi(j, c);
  for (const auto& b : config.lie()) {
    const Matrix<F> image = phi * b.transpose();
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t c = 0; c < f; ++c) span(row, i * f + c) = image(i, c);
    ++row;
  }
  return rank(std::move(span));
}

// ---------------------------------------------------------------------------
// Random group elements and orbit points

template <ExactField F>
Matrix<F> random_invertible(const F& field, std::size_t n, Rng& rng) {
  while (true) {
    Matrix<F> a = random_matrix(field, n, n, rng);
    if (!(det(a) == field.zero())) return a;
  }
}

template <ExactField F>
struct IsometrySample {
  Matrix<F> matrix;
  std::size_t attempts = 0;
  bool fell_back_to_identity = false;
};

/// Cayley transform B = (I - M)(I + M)^{-1} of a random M in the Lie
/// algebra; B^t K B = K and det B = 1. Retries on singular I + M, falls back
/// to the identity after 64 failures.
template <ExactField F>
IsometrySample<F> random_isometry(const BilinearForm<F>& form,
                                  const std::vector<Matrix<F>>& lie,
                                  std::uint64_t seed) {
  const auto& field = form.field();
  const std::size_t f = form.dim();
  const Matrix<F> id = Matrix<F>::identity(field, f);
  Rng rng(seed);
  constexpr std::size_t kMaxAttempts = 64;
  for (std::size_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    Matrix<F> m(field, f, f);
    for (const auto& b : lie) m = m + field.random(rng) * b;
    const Matrix<F> plus = id + m;
    if (det(plus) == field.zero()) continue;
    return {(id - m) * inverse(plus), attempt, false};
  }
  return {id, kMaxAttempts, true};
}

template <ExactField F>
IsometrySample<F> random_isometry(const BilinearForm<F>& form,
                                  std::uint64_t seed) {
  return random_isometry(form, lie_basis(form), seed);
}

/// A Phi B^t for the representative Phi, random A in GL(E), random special
/// isometry B.
template <ExactField F>
Matrix<F> random_orbit_point(const OrbitParams& params,
                             const SpaceConfig<F>& config,
                             std::uint64_t seed) {
  const Matrix<F> rep = representative(params, config);
  Rng rng(mix_seed(seed, 0));
  const Matrix<F> a = random_invertible(config.field(), config.e(), rng);
  const auto b =
      random_isometry(config.form(), config.lie(), mix_seed(seed, 1));
  return a * rep * b.matrix.transpose();
}

}  // namespace isodet
