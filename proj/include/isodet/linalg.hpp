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
 * @file linalg.hpp
 * @brief Exact dense linear algebra over any ExactField.
 *
 * All eliminations pivot on the first non-zero entry, so results are
 * reproducible bit-for-bit. The 0x0 determinant and Pfaffian are 1.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "isodet/matrix.hpp"

namespace isodet {

/// Reduced row echelon form together with the pivot columns.
template <ExactField F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
Echelon<F> rref(Matrix<F> m) {
  const auto zero = m.field().zero();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const typename F::Scalar inv = m.field().one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == zero) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination (no back substitution).
template <ExactField F>
std::size_t rank(Matrix<F> m) {
  const auto zero = m.field().zero();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const typename F::Scalar inv = m.field().one() / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == zero) continue;
      const typename F::Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Determinant as the signed product of elimination pivots.
template <ExactField F>
typename F::Scalar det(Matrix<F> m) {
  if (!m.is_square())
    fail(ErrorCode::NonSquare, "det of " + Matrix<F>::shape(m));
  const auto zero = m.field().zero();
  auto result = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == zero) ++p;
    if (p == n) return zero;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      result = -result;
    }
    result *= m(c, c);
    const typename F::Scalar inv = m.field().one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == zero) continue;
      const typename F::Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return result;
}

/// Pfaffian by skew elimination: with pivot block [[0, a], [-a, 0]] on
/// indices {0, 1}, pf(M) = a * pf(D + (C1^t C0 - C0^t C1) / a) over the
/// remaining indices. Swapping index 1 with j (rows and columns together)
/// negates the Pfaffian. Normalized so pf of the block-diagonal standard
/// symplectic matrix with blocks [[0, 1], [-1, 0]] is +1.
template <ExactField F>
typename F::Scalar pfaffian(const Matrix<F>& input) {
  if (!input.is_square())
    fail(ErrorCode::NonSquare, "pfaffian of " + Matrix<F>::shape(input));
  if (input.rows() % 2 != 0)
    fail(ErrorCode::OddDimension,
         "pfaffian needs even size, got " + std::to_string(input.rows()));
  if (!is_alternating(input))
    fail(ErrorCode::NotSkewSymmetric, "pfaffian input");

  const auto& field = input.field();
  const auto zero = field.zero();
  Matrix<F> m = input;
  auto result = field.one();
  std::size_t n = m.rows();
  while (n > 0) {
    std::size_t j = 1;
    while (j < n && m(0, j) == zero) ++j;
    if (j == n) return zero;
    if (j != 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(k, 1), m(k, j));
      for (std::size_t k = 0; k < n; ++k) std::swap(m(1, k), m(j, k));
      result = -result;
    }
    const auto a = m(0, 1);
    result *= a;
    const typename F::Scalar inv = field.one() / a;
    Matrix<F> next(field, n - 2, n - 2);
    for (std::size_t k = 2; k < n; ++k)
      for (std::size_t l = 2; l < n; ++l)
        next(k - 2, l - 2) =
            m(k, l) + (m(1, k) * m(0, l) - m(0, k) * m(1, l)) * inv;
    m = std::move(next);
    n -= 2;
  }
  return result;
}

namespace detail {
inline void check_index_set(std::span<const std::size_t> idx,
                            std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound)
      fail(ErrorCode::IndexOutOfRange,
           std::string(what) + " index " + std::to_string(idx[k]) +
               " >= " + std::to_string(bound));
    if (k > 0 && idx[k] <= idx[k - 1])
      fail(ErrorCode::IndexOutOfRange,
           std::string(what) + " indices must be strictly increasing");
  }
}
}  // namespace detail

template <ExactField F>
typename F::Scalar minor(const Matrix<F>& m, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    fail(ErrorCode::SizeMismatch, "minor needs |T| = |S|");
  detail::check_index_set(rows, m.rows(), "row");
  detail::check_index_set(cols, m.cols(), "column");
  return det(m.submatrix(rows, cols));
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square())
    fail(ErrorCode::NonSquare, "inverse of " + Matrix<F>::shape(m));
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    fail(ErrorCode::RankDeficient, "matrix is singular");
  Matrix<F> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Y with Y * M = I for M of full column rank. Y is supported on the first
/// maximal set of independent rows of M (first-pivot order).
template <ExactField F>
Matrix<F> left_inverse(const Matrix<F>& m) {
  const std::size_t n = m.cols();
  const auto e = rref(m.transpose());
  if (e.pivots.size() < n)
    fail(ErrorCode::RankDeficient,
         "left inverse needs full column rank " + std::to_string(n) +
             ", rank is " + std::to_string(e.pivots.size()));
  // Pivot columns of M^t are independent rows of M.
  const std::vector<std::size_t> all_cols = [&] {
    std::vector<std::size_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = j;
    return v;
  }();
  const Matrix<F> square_inv = inverse(m.submatrix(e.pivots, all_cols));
  Matrix<F> y(m.field(), n, m.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) y(i, e.pivots[k]) = square_inv(i, k);
  return y;
}

/// Basis of the right null space {v : M v = 0}, one vector per free column.
template <ExactField F>
std::vector<std::vector<typename F::Scalar>> kernel_basis(const Matrix<F>& m) {
  const auto e = rref(m);
  const auto& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Scalar> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// dim(rowspace(a) ∩ rowspace(b)).
template <ExactField F>
std::size_t row_space_intersection_dim(const Matrix<F>& a,
                                       const Matrix<F>& b) {
  return rank(a) + rank(b) - rank(a.stacked(b));
}

/// All k-subsets of {0..n-1}, each increasing, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace isodet
