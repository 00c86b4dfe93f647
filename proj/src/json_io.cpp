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

#include "isodet/json_io.hpp"

namespace isodet {

Json to_json(const FieldDescriptor& d) {
  Json j{{"kind", std::string(to_string(d.kind))}};
  if (d.kind != FieldKind::rationals) j["p"] = d.p;
  if (d.kind == FieldKind::quadratic_extension) j["nonresidue"] = d.nonresidue;
  return j;
}

FieldDescriptor descriptor_from_json(const Json& j) {
  const auto kind = json_get<std::string>(j, "kind");
  if (kind == "rationals") return field_create(FieldKind::rationals);
  const auto p = json_get<std::uint64_t>(j, "p");
  if (kind == "prime") return field_create(FieldKind::prime, p);
  if (kind == "quadratic-extension") {
    std::optional<std::uint64_t> d;
    if (j.contains("nonresidue")) d = json_get<std::uint64_t>(j, "nonresidue");
    return field_create(FieldKind::quadratic_extension, p, d);
  }
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

Json to_json(const OrbitParams& p) {
  Json j{{"r1", p.r1}, {"r2", p.r2}};
  if (p.sign) j["sign"] = std::string(1, sign_char(*p.sign));
  return j;
}

OrbitParams params_from_json(const Json& j) {
  OrbitParams p{json_get<std::size_t>(j, "r1"), json_get<std::size_t>(j, "r2"), {}};
  if (j.contains("sign") && !j.at("sign").is_null()) {
    const auto s = json_get<std::string>(j, "sign");
    if (s == "+") p.sign = Sign::plus;
    else if (s == "-") p.sign = Sign::minus;
    else fail(ErrorCode::ParseError, "bad sign '" + s + "'");
  }
  return p;
}

Ternary ternary_from_string(std::string_view s) {
  for (auto t : {Ternary::yes, Ternary::no, Ternary::yes_if_char0, Ternary::unknown})
    if (to_string(t) == s) return t;
  fail(ErrorCode::ParseError, "bad ternary '" + std::string(s) + "'");
}

Json to_json(const OrbitFacts& f) {
  return Json{{"dim", f.dim},
              {"codim", f.codim},
              {"normal", f.normal},
              {"cohen_macaulay", std::string(to_string(f.cohen_macaulay))},
              {"rational_singularities_char0", f.rational_singularities_char0},
              {"gorenstein", std::string(to_string(f.gorenstein))},
              {"strongly_f_regular", std::string(to_string(f.strongly_f_regular))}};
}

OrbitFacts facts_from_json(const Json& j) {
  OrbitFacts f;
  f.dim = json_get<std::size_t>(j, "dim");
  f.codim = json_get<std::size_t>(j, "codim");
  f.normal = json_get<bool>(j, "normal");
  f.cohen_macaulay = ternary_from_string(json_get<std::string>(j, "cohen_macaulay"));
  f.rational_singularities_char0 = json_get<bool>(j, "rational_singularities_char0");
  f.gorenstein = ternary_from_string(json_get<std::string>(j, "gorenstein"));
  f.strongly_f_regular =
      ternary_from_string(json_get<std::string>(j, "strongly_f_regular"));
  return f;
}

Json to_json(const GeneratorLabel& label) { return to_string(label); }

}  // namespace isodet
