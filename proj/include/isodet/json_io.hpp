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
 * @file json_io.hpp
 * @brief JSON encodings of fields, matrices, forms, orbit labels, facts and
 * generator sets. Scalars are always strings ("3", "1+2*w", "-4/3").
 */

#pragma once

#include "json.hpp"
#include <optional>
#include <string>

#include "isodet/equations.hpp"
#include "isodet/forms.hpp"
#include "isodet/orbit_params.hpp"

namespace isodet {

using Json = nlohmann::ordered_json;

Json to_json(const FieldDescriptor& d);
FieldDescriptor descriptor_from_json(const Json& j);

Json to_json(const OrbitParams& p);
OrbitParams params_from_json(const Json& j);

Json to_json(const OrbitFacts& facts);
OrbitFacts facts_from_json(const Json& j);
Ternary ternary_from_string(std::string_view s);

Json to_json(const GeneratorLabel& label);

/// Reads a key, raising ParseError with the key name when it is missing or
/// has the wrong type.
template <class T>
T json_get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("missing JSON key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::ParseError, std::string("bad JSON value for '") + key + "'");
  }
}

template <ExactField F>
Json to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().render(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"field", to_json(m.field().descriptor())}, {"rows", std::move(rows)}};
}

/// Entries may be strings or integers. A "field" member, when present, must
/// match the target field.
template <ExactField F>
Matrix<F> matrix_from_json(const Json& j, const F& field) {
  if (j.is_object() && j.contains("field") &&
      !(descriptor_from_json(j.at("field")) == field.descriptor()))
    fail(ErrorCode::FieldMismatch,
         "matrix is over " + field_name(descriptor_from_json(j.at("field"))) +
             ", expected " + field_name(field.descriptor()));
  const Json& rows = j.is_array() ? j : j.contains("rows") ? j.at("rows") : j;
  if (!rows.is_array()) fail(ErrorCode::ParseError, "matrix rows must be an array");
  std::vector<std::vector<typename F::Scalar>> data;
  for (const auto& row : rows) {
    if (!row.is_array()) fail(ErrorCode::ParseError, "matrix row must be an array");
    std::vector<typename F::Scalar> r;
    for (const auto& x : row) {
      if (x.is_string()) r.push_back(field.parse(x.get<std::string>()));
      else if (x.is_number_integer()) r.push_back(field.from_int(x.get<std::int64_t>()));
      else fail(ErrorCode::ParseError, "matrix entry must be a string or integer");
    }
    data.push_back(std::move(r));
  }
  if (data.empty()) return Matrix<F>(field, 0, 0);
  return Matrix<F>::from_rows(field, data);
}

/// {"kind": ..., "gram": "split" | "identity" | {"rows": ...}, "f": n}
template <ExactField F>
Json to_json(const BilinearForm<F>& form) {
  Json j{{"kind", std::string(to_string(form.kind()))}, {"f", form.dim()}};
  if (form.is_default_split()) j["gram"] = "split";
  else if (form.kind() == FormKind::symmetric &&
           form.gram() == Matrix<F>::identity(form.field(), form.dim()))
    j["gram"] = "identity";
  else j["gram"] = Json{{"rows", to_json(form.gram())["rows"]}};
  return j;
}

/// f is needed for the named Gram matrices unless the object carries it.
template <ExactField F>
BilinearForm<F> form_from_json(const Json& j, const F& field,
                               std::optional<std::size_t> f = {}) {
  const auto kind = parse_form_kind(json_get<std::string>(j, "kind"));
  if (!j.contains("gram")) fail(ErrorCode::ParseError, "missing JSON key 'gram'");
  const Json& g = j.at("gram");
  if (g.is_string()) {
    if (j.contains("f")) f = json_get<std::size_t>(j, "f");
    if (!f) fail(ErrorCode::ParseError, "named Gram matrix needs 'f'");
    const auto name = g.get<std::string>();
    if (name == "split") return BilinearForm<F>::split(field, kind, *f);
    if (name == "identity") {
      if (kind != FormKind::symmetric)
        fail(ErrorCode::InvalidForm, "identity Gram matrix is not alternating");
      return BilinearForm<F>::identity(field, *f);
    }
    fail(ErrorCode::ParseError, "unknown Gram name '" + name + "'");
  }
  return BilinearForm<F>(kind, matrix_from_json(g, field));
}

template <ExactField F>
Json to_json(const Polynomial<F>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (auto x : m) exps.push_back(static_cast<int>(x));
    terms.push_back(Json{{"exps", std::move(exps)}, {"coeff", p.field().render(c)}});
  }
  return terms;
}

/// List of {label, degree, text, terms}.
template <ExactField F>
Json to_json(const GeneratorSet<F>& set, std::size_t f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i)
    out.push_back(Json{{"label", to_string(set.labels[i])},
                       {"degree", set.polynomials[i].degree()},
                       {"text", set.polynomials[i].render(f)},
                       {"terms", to_json(set.polynomials[i])}});
  return out;
}

template <ExactField F>
Polynomial<F> polynomial_from_json(const Json& terms, const F& field,
                                   std::size_t nvars) {
  Polynomial<F> p(field, nvars);
  if (!terms.is_array()) fail(ErrorCode::ParseError, "terms must be an array");
  for (const auto& t : terms) {
    const auto exps = json_get<std::vector<int>>(t, "exps");
    if (exps.size() != nvars)
      fail(ErrorCode::DimensionMismatch, "exponent vector has wrong length");
    Monomial m;
    for (int x : exps) {
      if (x < 0 || x > 255) fail(ErrorCode::ParseError, "exponent out of range");
      m.push_back(static_cast<std::uint8_t>(x));
    }
    p.add_term(m, field.parse(json_get<std::string>(t, "coeff")));
  }
  return p;
}

}  // namespace isodet
