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
 * @file atlas.hpp
 * @brief The orbit atlas: one row per valid label with dimension, the
 * transcribed singularity facts and an inventory of defining equations.
 */

#pragma once

#include <string>
#include <vector>

#include "isodet/equations.hpp"
#include "isodet/json_io.hpp"

namespace isodet {

struct InventoryEntry {
  std::string kind;  ///< minor, psi-minor, psi-pfaffian, W, V+ or V-
  std::size_t count = 0;
  std::size_t degree = 0;

  friend bool operator==(const InventoryEntry&, const InventoryEntry&) = default;
};

struct AtlasRow {
  OrbitParams params;
  OrbitFacts facts;
  std::vector<InventoryEntry> generators;

  friend bool operator==(const AtlasRow&, const AtlasRow&) = default;
};

struct AtlasTable {
  SpaceShape shape;
  std::string field;  ///< field the generators were counted over
  std::vector<AtlasRow> rows;

  friend bool operator==(const AtlasTable&, const AtlasTable&) = default;
};

/// Groups a generator set by (kind, degree), in order of first appearance.
std::vector<InventoryEntry> inventory(const std::vector<GeneratorLabel>& labels,
                                      const std::vector<std::size_t>& degrees);

template <ExactField F>
AtlasTable build_atlas(const SpaceConfig<F>& config) {
  AtlasTable t{config.shape(), field_name(config.field().descriptor()), {}};
  for (const auto& p : valid_params(config.shape())) {
    const auto g = orbit_generators(p, config);
    std::vector<std::size_t> degrees;
    for (const auto& poly : g.polynomials) degrees.push_back(poly.degree());
    t.rows.push_back({p, facts(p, config.shape()), inventory(g.labels, degrees)});
  }
  return t;
}

Json to_json(const AtlasTable& t);
AtlasTable atlas_from_json(const Json& j);
/// Fixed-width table followed by footnotes for every marker used.
std::string render_atlas(const AtlasTable& t);

}  // namespace isodet
