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

#include "isodet/orbit_params.hpp"

#include <cctype>
#include <charconv>

#include "isodet/error.hpp"
#include "isodet/linalg.hpp"

namespace isodet {

std::string_view to_string(FormKind kind) noexcept {
  return kind == FormKind::symmetric ? "symmetric" : "alternating";
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "symmetric" || text == "sym") return FormKind::symmetric;
  if (text == "alternating" || text == "alt") return FormKind::alternating;
  fail(ErrorCode::ParseError, "unknown form kind '" + std::string(text) + "'");
}

std::string_view to_string(Ternary t) noexcept {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    case Ternary::yes_if_char0: return "yes-if-char0";
    case Ternary::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const OrbitParams& p) {
  std::string s = "(" + std::to_string(p.r1) + "," + std::to_string(p.r2);
  if (p.sign) {
    s += ',';
    s += sign_char(*p.sign);
  }
  return s + ")";
}

OrbitParams parse_orbit_params(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
      s.push_back(c);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    fail(ErrorCode::ParseError, "expected r1,r2[,sign]: '" + s + "'");
  OrbitParams p;
  for (int k = 0; k < 2; ++k) {
    std::size_t v = 0;
    const auto& part = parts[static_cast<std::size_t>(k)];
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      fail(ErrorCode::ParseError, "bad rank '" + part + "'");
    (k == 0 ? p.r1 : p.r2) = v;
  }
  if (parts.size() == 3) {
    if (parts[2] == "+") p.sign = Sign::plus;
    else if (parts[2] == "-") p.sign = Sign::minus;
    else fail(ErrorCode::ParseError, "bad sign '" + parts[2] + "'");
  }
  return p;
}

void validate_shape(const SpaceShape& shape) {
  if (shape.e < 1)
    fail(ErrorCode::InvalidConfig, "dim E must be at least 1");
  if (shape.f < 3)
    fail(ErrorCode::InvalidConfig, "dim F must be at least 3");
  if (shape.kind == FormKind::alternating && shape.f % 2 != 0)
    fail(ErrorCode::InvalidConfig, "alternating form needs f even");
}

bool is_exceptional_pair(std::size_t r1, std::size_t r2,
                         const SpaceShape& shape) {
  return shape.kind == FormKind::symmetric && shape.f % 2 == 0 &&
         r1 == shape.f / 2 && r2 == 0;
}

bool is_valid(const OrbitParams& p, const SpaceShape& shape) {
  if (p.r2 > p.r1 || p.r1 > shape.e) return false;
  if (2 * p.r1 > shape.f + p.r2) return false;
  if (shape.kind == FormKind::alternating && p.r2 % 2 != 0) return false;
  return p.sign.has_value() == is_exceptional_pair(p.r1, p.r2, shape);
}

std::vector<OrbitParams> valid_params(const SpaceShape& shape) {
  validate_shape(shape);
  std::vector<OrbitParams> out;
  for (std::size_t r1 = 0; r1 <= shape.e; ++r1) {
    for (std::size_t r2 = 0; r2 <= r1; ++r2) {
      if (is_exceptional_pair(r1, r2, shape)) {
        out.push_back({r1, r2, Sign::plus});
        out.push_back({r1, r2, Sign::minus});
        continue;
      }
      OrbitParams p{r1, r2, std::nullopt};
      if (is_valid(p, shape)) out.push_back(p);
    }
  }
  return out;
}

namespace {
void require_valid(const OrbitParams& p, const SpaceShape& shape) {
  validate_shape(shape);
  if (!is_valid(p, shape))
    fail(ErrorCode::InvalidParams,
         to_string(p) + " for e=" + std::to_string(shape.e) +
             " f=" + std::to_string(shape.f) + " " +
             std::string(to_string(shape.kind)));
}
}  // namespace

std::size_t codimension(const OrbitParams& p, const SpaceShape& shape) {
  require_valid(p, shape);
  const std::size_t base = (shape.e - p.r1) * (shape.f - p.r1);
  const std::size_t gap = p.r1 - p.r2;
  return shape.kind == FormKind::alternating ? base + binomial(gap, 2)
                                             : base + binomial(gap + 1, 2);
}

std::size_t dimension(const OrbitParams& p, const SpaceShape& shape) {
  return shape.e * shape.f - codimension(p, shape);
}

bool closure_leq(const OrbitParams& p, const OrbitParams& q,
                 const SpaceShape& shape) {
  validate_shape(shape);
  if (!is_valid(p, shape) || !is_valid(q, shape))
    fail(ErrorCode::ConfigMismatch,
         to_string(p) + " and " + to_string(q) + " are not both valid here");
  if (p.sign && q.sign && *p.sign != *q.sign) return false;
  return p.r1 <= q.r1 && p.r2 <= q.r2;
}

OrbitFacts facts(const OrbitParams& p, const SpaceShape& shape) {
  require_valid(p, shape);
  const std::size_t e = shape.e, f = shape.f, r1 = p.r1, r2 = p.r2;
  const bool full_rank = r1 == e;

  OrbitFacts out;
  out.codim = codimension(p, shape);
  out.dim = e * f - out.codim;

  if (shape.kind == FormKind::alternating) {
    out.normal = true;
    out.rational_singularities_char0 = true;
    if (full_rank && e < f) out.gorenstein = Ternary::yes;
    if (r2 == 0 || (full_rank && f >= 2 * e))
      out.strongly_f_regular = Ternary::yes;
    if (r2 == 0 || (full_rank && e < f))
      out.cohen_macaulay = Ternary::yes;
    else
      out.cohen_macaulay = Ternary::yes_if_char0;
    return out;
  }

  // Symmetric. The normality criterion's third clause is read as r2 = r1.
  out.normal = r2 + f != 2 * r1 || r2 == 0 || r2 == r1;
  out.rational_singularities_char0 = out.normal;
  if (!out.normal) {
    out.cohen_macaulay = full_rank ? Ternary::yes : Ternary::no;
  } else if (r2 == 0 || (full_rank && e < f)) {
    out.cohen_macaulay = Ternary::yes;
  } else {
    out.cohen_macaulay = Ternary::yes_if_char0;
  }
  // The Gorenstein criterion is stated for the rank-condition variety; for
  // the reducible (f/2, 0) case that is the union, not a component.
  if (full_rank && e < f && !p.sign) {
    const bool gor = (e - r2) % 2 == 1 || r2 == 0 || r2 == e;
    out.gorenstein = gor ? Ternary::yes : Ternary::no;
  }
  if (r2 == 0 || (full_rank && f >= 2 * e && (e - r2) % 2 == 1))
    out.strongly_f_regular = Ternary::yes;
  return out;
}

}  // namespace isodet
