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

#include "isodet/atlas.hpp"

#include <algorithm>
#include <array>

namespace isodet {

std::vector<InventoryEntry> inventory(const std::vector<GeneratorLabel>& labels,
                                      const std::vector<std::size_t>& degrees) {
  std::vector<InventoryEntry> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string kind;
    switch (labels[i].kind) {
      case GeneratorLabel::Kind::minor: kind = "minor"; break;
      case GeneratorLabel::Kind::psi_minor: kind = "psi-minor"; break;
      case GeneratorLabel::Kind::psi_pfaffian: kind = "psi-pfaffian"; break;
      case GeneratorLabel::Kind::quadratic_invariant: kind = "W"; break;
      case GeneratorLabel::Kind::component:
        kind = std::string("V") + sign_char(labels[i].sign.value_or(Sign::plus));
        break;
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const InventoryEntry& e) {
      return e.kind == kind && e.degree == degrees[i];
    });
    if (it == out.end()) out.push_back({kind, 1, degrees[i]});
    else ++it->count;
  }
  return out;
}

Json to_json(const AtlasTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json gens = Json::array();
    for (const auto& g : r.generators)
      gens.push_back(Json{{"kind", g.kind}, {"count", g.count}, {"degree", g.degree}});
    rows.push_back(Json{{"params", to_json(r.params)},
                        {"facts", to_json(r.facts)},
                        {"generators", std::move(gens)}});
  }
  return Json{{"e", t.shape.e},
              {"f", t.shape.f},
              {"kind", std::string(to_string(t.shape.kind))},
              {"generator_field", t.field},
              {"rows", std::move(rows)}};
}

AtlasTable atlas_from_json(const Json& j) {
  AtlasTable t;
  t.shape = {json_get<std::size_t>(j, "e"), json_get<std::size_t>(j, "f"),
             parse_form_kind(json_get<std::string>(j, "kind"))};
  t.field = json_get<std::string>(j, "generator_field");
  for (const auto& r : json_get<Json>(j, "rows")) {
    AtlasRow row{params_from_json(json_get<Json>(r, "params")),
                 facts_from_json(json_get<Json>(r, "facts")),
                 {}};
    for (const auto& g : json_get<Json>(r, "generators"))
      row.generators.push_back({json_get<std::string>(g, "kind"),
                                json_get<std::size_t>(g, "count"),
                                json_get<std::size_t>(g, "degree")});
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::string cell(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    case Ternary::yes_if_char0: return "yes^";
    case Ternary::unknown: return "?";
  }
  return "?";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_atlas(const AtlasTable& t) {
  using Row = std::array<std::string, 9>;
  std::vector<Row> rows{{"class", "dim", "codim", "normal", "CM", "RS(char0)",
                         "Gorenstein", "F-regular", "generators"}};
  bool unknown = false, char0 = false, signed_rows = false, normality_clause = false;
  for (const auto& r : t.rows) {
    const auto& f = r.facts;
    std::string normal = yes_no(f.normal);
    // Rows decided by the r2 = r1 reading of the normality criterion.
    if (t.shape.kind == FormKind::symmetric && r.params.r2 == r.params.r1 &&
        r.params.r2 != 0 && r.params.r2 + t.shape.f == 2 * r.params.r1) {
      normal += "*";
      normality_clause = true;
    }
    std::string gens;
    for (const auto& g : r.generators) {
      if (!gens.empty()) gens += "; ";
      gens += std::to_string(g.count) + " " + g.kind + " deg " + std::to_string(g.degree);
    }
    if (gens.empty()) gens = "none";
    Row row{to_string(r.params), std::to_string(f.dim), std::to_string(f.codim),
            normal, cell(f.cohen_macaulay), yes_no(f.rational_singularities_char0),
            cell(f.gorenstein), cell(f.strongly_f_regular), gens};
    for (auto x : {f.cohen_macaulay, f.gorenstein, f.strongly_f_regular}) {
      unknown |= x == Ternary::unknown;
      char0 |= x == Ternary::yes_if_char0;
    }
    signed_rows |= r.params.sign.has_value();
    rows.push_back(std::move(row));
  }
  std::array<std::size_t, 9> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 9; ++c) width[c] = std::max(width[c], row[c].size());

  std::string out = "atlas: " + std::string(to_string(t.shape.kind)) +
                    " e=" + std::to_string(t.shape.e) +
                    " f=" + std::to_string(t.shape.f) +
                    " (generators over " + t.field + ")\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 9; ++c) {
      line += row[c];
      if (c + 1 < 9) line.append(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  std::vector<std::string> notes;
  if (unknown)
    notes.push_back("?     no known classification result covers this entry; left open, not guessed");
  if (char0)
    notes.push_back("yes^  holds in characteristic 0; positive characteristic not covered");
  if (signed_rows)
    notes.push_back("(f/2,0,+/-) the two components are isomorphic; the Gorenstein criterion is "
                    "stated for their union, so it is left open per component");
  if (t.shape.kind == FormKind::symmetric)
    notes.push_back(std::string(normality_clause ? "*     " : "-     ") +
                    "normality criterion read with its third clause as r2 = r1");
  if (!notes.empty()) {
    out += "notes:\n";
    for (const auto& n : notes) out += "  " + n + "\n";
  }
  return out;
}

}  // namespace isodet
