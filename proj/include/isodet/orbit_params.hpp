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
 * @file orbit_params.hpp
 * @brief Field-independent combinatorics of the GL(E) x Sp(F) and
 * GL(E) x SO(F) orbit stratification of E (x) F.
 *
 * An orbit is labelled by (r1, r2): the rank of the e x f matrix Phi and the
 * rank of its Gram matrix psi(Phi) = Phi K Phi^t. Valid labels satisfy
 *
 *     0 <= r2 <= r1 <= e,   2 r1 - r2 <= f,   r2 even for alternating forms.
 *
 * For a symmetric form with f even the label (f/2, 0) splits into two orbits
 * (two families of maximal isotropic subspaces); those carry a sign.
 *
 * Everything here depends only on (e, f, kind), never on the field.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isodet {

enum class FormKind { symmetric, alternating };

std::string_view to_string(FormKind kind) noexcept;
/// Accepts "symmetric"/"sym" and "alternating"/"alt".
FormKind parse_form_kind(std::string_view text);

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct OrbitParams {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  std::optional<Sign> sign;

  friend auto operator<=>(const OrbitParams&, const OrbitParams&) = default;
};

/// "(r1,r2)" or "(r1,r2,+)".
std::string to_string(const OrbitParams& p);
/// Parses "r1,r2" or "r1,r2,+|-" (parentheses optional).
OrbitParams parse_orbit_params(std::string_view text);

/// (e, f, kind): everything the orbit combinatorics depends on.
struct SpaceShape {
  std::size_t e = 1;
  std::size_t f = 3;
  FormKind kind = FormKind::symmetric;

  friend bool operator==(const SpaceShape&, const SpaceShape&) = default;
};

/// e >= 1, f >= 3, alternating needs f even.
void validate_shape(const SpaceShape& shape);

/// (f/2, 0) for a symmetric form with f even.
bool is_exceptional_pair(std::size_t r1, std::size_t r2,
                         const SpaceShape& shape);

bool is_valid(const OrbitParams& p, const SpaceShape& shape);

/// All valid labels in lexicographic order, the exceptional pair emitted
/// twice (+ before -).
std::vector<OrbitParams> valid_params(const SpaceShape& shape);

/// Codimension of the orbit closure in E (x) F:
///   alternating: (e - r1)(f - r1) + C(r1 - r2, 2)
///   symmetric:   (e - r1)(f - r1) + C(r1 - r2 + 1, 2)
std::size_t codimension(const OrbitParams& p, const SpaceShape& shape);
std::size_t dimension(const OrbitParams& p, const SpaceShape& shape);

/// O_p contained in the closure of O_q. Closures are cut out by the rank
/// inequalities, so this is componentwise <=; two signed classes compare
/// only when their signs agree.
bool closure_leq(const OrbitParams& p, const OrbitParams& q,
                 const SpaceShape& shape);

enum class Ternary { yes, no, yes_if_char0, unknown };
std::string_view to_string(Ternary t) noexcept;

/// Singularity classification of an orbit closure, transcribed from the
/// known results (not computed). Unstated cases are `unknown`.
struct OrbitFacts {
  std::size_t dim = 0;
  std::size_t codim = 0;
  bool normal = false;
  Ternary cohen_macaulay = Ternary::unknown;
  bool rational_singularities_char0 = false;
  Ternary gorenstein = Ternary::unknown;
  Ternary strongly_f_regular = Ternary::unknown;

  friend bool operator==(const OrbitFacts&, const OrbitFacts&) = default;
};

OrbitFacts facts(const OrbitParams& p, const SpaceShape& shape);

}  // namespace isodet
