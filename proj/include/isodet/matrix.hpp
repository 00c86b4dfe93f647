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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "isodet/error.hpp"
#include "isodet/fields.hpp"

namespace isodet {

/// Dense row-major matrix over an exact field. The matrix owns a copy of its
/// field, so 0x0 and empty matrices still know where their scalars live.
template <ExactField F>
class Matrix {
 public:
  using Field = F;
  using Scalar = typename F::Scalar;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Integer literal rows, mapped into the field.
  static Matrix from_ints(
      const F& field,
      std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(ErrorCode::SizeMismatch, "ragged rows");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const F& field,
                          const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(ErrorCode::SizeMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Scalar> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const Scalar> data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx,
                   std::span<const std::size_t> col_idx) const {
    Matrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  /// Rows of *this followed by rows of other.
  Matrix stacked(const Matrix& other) const {
    if (cols_ != other.cols_)
      fail(ErrorCode::DimensionMismatch, "stacking needs equal column counts");
    Matrix s(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return s;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == field_.zero())) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = -x;
    return c;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(ErrorCode::DimensionMismatch,
           "product of " + shape(a) + " and " + shape(b));
    Matrix c(a.field_, a.rows_, b.cols_);
    const Scalar zero = a.field_.zero();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static std::string shape(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(ErrorCode::DimensionMismatch, shape(a) + " vs " + shape(b));
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <ExactField F>
bool is_symmetric(const Matrix<F>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// Skew-symmetric with zero diagonal (alternating).
template <ExactField F>
bool is_alternating(const Matrix<F>& m) {
  if (!m.is_square()) return false;
  const auto zero = m.field().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!(m(i, i) == zero)) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  }
  return true;
}

template <ExactField F>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols,
                        Rng& rng) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.random(rng);
  return m;
}

template <ExactField F>
Matrix<F> random_alternating(const F& field, std::size_t n, Rng& rng) {
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = field.random(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

template <ExactField F>
Matrix<F> random_symmetric(const F& field, std::size_t n, Rng& rng) {
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = field.random(rng);
  return m;
}

}  // namespace isodet
