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

// Slow reference implementations used only by the tests.

#pragma once

#include <vector>

#include "isodet/matrix.hpp"

namespace oracle {

/// Laplace expansion along the first row.
template <class F>
typename F::Scalar cofactor_det(const isodet::Matrix<F>& m) {
  const auto& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return field.one();
  auto acc = field.zero();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const typename F::Scalar term =
        m(0, j) * cofactor_det(m.submatrix(rows, cols));
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Sum over perfect matchings of {0..n-1}, each signed by its crossing
/// number parity.
template <class F>
typename F::Scalar matching_pfaffian(const isodet::Matrix<F>& m) {
  const auto& field = m.field();
  const std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  auto total = field.zero();
  auto recurse = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      std::size_t crossings = 0;
      for (const auto& [a, b] : pairs)
        for (const auto& [c, d] : pairs)
          if (a < c && c < b && b < d) ++crossings;
      auto term = field.one();
      for (const auto& [a, b] : pairs) term *= m(a, b);
      if (crossings % 2) total -= term;
      else total += term;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  recurse(recurse);
  return total;
}

}  // namespace oracle
