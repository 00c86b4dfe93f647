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

#include "isodet/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace isodet {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::warn: return "warn";
  }
  return "fail";
}

namespace {
constexpr std::pair<Mutation, std::string_view> kMutations[] = {
    {Mutation::none, "none"},
    {Mutation::drop_generator, "drop-generator"},
    {Mutation::perturb_codimension, "perturb-codimension"},
    {Mutation::drop_class, "drop-class"},
    {Mutation::corrupt_closure, "corrupt-closure"},
};

CheckStatus parse_status(std::string_view s) {
  for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::warn})
    if (to_string(st) == s) return st;
  fail(ErrorCode::ParseError, "bad status '" + std::string(s) + "'");
}
}  // namespace

std::string_view to_string(Mutation m) noexcept {
  for (const auto& [k, name] : kMutations)
    if (k == m) return name;
  return "none";
}

Mutation parse_mutation(std::string_view text) {
  for (const auto& [k, name] : kMutations)
    if (name == text) return k;
  fail(ErrorCode::ParseError, "unknown mutation '" + std::string(text) + "'");
}

Json VerificationReport::to_json() const {
  Json mode = exhaustive ? Json{{"kind", "exhaustive"}}
                         : Json{{"kind", "sampled"}, {"n", samples}, {"seed", seed}};
  Json j{{"check", check},
         {"config", config},
         {"mode", std::move(mode)},
         {"status", std::string(isodet::to_string(status))},
         {"witness", witness},
         {"tallies", tallies},
         {"notes", notes}};
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
  VerificationReport r;
  r.check = json_get<std::string>(j, "check");
  r.config = j.value("config", Json::object());
  const Json mode = j.value("mode", Json::object());
  r.exhaustive = json_get<std::string>(mode, "kind") == "exhaustive";
  if (!r.exhaustive) {
    r.samples = json_get<std::size_t>(mode, "n");
    r.seed = json_get<std::uint64_t>(mode, "seed");
  }
  r.status = parse_status(json_get<std::string>(j, "status"));
  r.witness = j.value("witness", Json());
  r.tallies = j.value("tallies", Json::object());
  r.notes = j.value("notes", std::vector<std::string>{});
  if (j.contains("wall_seconds")) r.wall_seconds = json_get<double>(j, "wall_seconds");
  return r;
}

std::string to_json_lines(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += r.to_json().dump() + "\n";
  return out;
}

namespace {

std::string describe_config(const Json& c) {
  std::ostringstream s;
  if (c.contains("kind")) s << (c["kind"] == "symmetric" ? "sym" : "alt");
  if (c.contains("e")) s << " e=" << c["e"].get<std::size_t>();
  if (c.contains("f")) s << " f=" << c["f"].get<std::size_t>();
  if (c.contains("field")) {
    try {
      s << " " << field_name(descriptor_from_json(c["field"]));
    } catch (const Error&) {
    }
  }
  if (c.contains("primes")) {
    s << " q=";
    bool first = true;
    for (const auto& p : c["primes"]) {
      s << (first ? "" : ",") << p.get<std::uint32_t>();
      first = false;
    }
  }
  if (c.contains("gram") && c["gram"].is_string() && c["gram"] != "split")
    s << " " << c["gram"].get<std::string>();
  else if (c.contains("gram") && !c["gram"].is_string())
    s << " custom";
  if (c.contains("params")) s << " " << c["params"].get<std::string>();
  return s.str();
}

std::string describe_tallies(const Json& t) {
  std::string out;
  for (const auto& [k, v] : t.items()) {
    if (!v.is_number_integer()) continue;
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v.get<std::int64_t>());
  }
  return out;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string summary_table(const std::vector<VerificationReport>& reports) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"check", "status", "mode", "config", "tallies"});
  for (const auto& r : reports) {
    std::string mode = r.exhaustive ? "exhaustive"
                                    : "sampled(" + std::to_string(r.samples) +
                                          "," + std::to_string(r.seed) + ")";
    std::string detail = describe_tallies(r.tallies);
    for (const auto& n : r.notes) detail += (detail.empty() ? "" : "; ") + n;
    rows.push_back({r.check, std::string(to_string(r.status)), mode,
                    describe_config(r.config), detail});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) line += pad(row[c], width[c]) + "  ";
    line += row[4];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

bool any_hard_fail(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == CheckStatus::fail;
  });
}

VerificationReport point_count_dimension_estimate(
    const OrbitParams& params, const SpaceShape& shape,
    const std::vector<std::uint32_t>& primes, const VerifyOptions& opt) {
  detail::Stopwatch clock(opt.timing);
  validate_shape(shape);
  if (!is_valid(params, shape)) fail(ErrorCode::InvalidParams, to_string(params));
  std::vector<std::uint32_t> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> usable;
  for (auto q : sorted) {
    field_create(FieldKind::prime, q);  // validates q
    const auto n = detail::checked_power(q, shape.e * shape.f);
    if (n && *n <= opt.budget) usable.push_back(q);
  }
  if (usable.size() < 2)
    fail(ErrorCode::BudgetExceeded,
         "point counts need two primes with q^(ef) within the budget of " +
             std::to_string(opt.budget));
  usable.erase(usable.begin(), usable.end() - 2);

  VerificationReport r;
  r.check = "counts";
  r.config = Json{{"e", shape.e},
                  {"f", shape.f},
                  {"kind", std::string(to_string(shape.kind))},
                  {"gram", "split"},
                  {"primes", usable},
                  {"params", to_string(params)}};
  const std::size_t h = shape.f / 2;
  Json counts = Json::object();
  std::vector<double> n;
  for (auto q : usable) {
    const PrimeField field(q);
    const SpaceConfig<PrimeField> config(
        shape.e, BilinearForm<PrimeField>::split(field, shape.kind, shape.f));
    const auto shards = detail::sweep(
        field, shape.e, shape.f, opt.threads, std::uint64_t{0},
        [&](std::uint64_t& acc, const Matrix<PrimeField>& phi) {
          const std::size_t r1 = rank(phi);
          if (r1 > params.r1) return;
          const std::size_t r2 = r1 == 0 ? 0 : isotropic_rank(phi, config.form());
          if (r2 > params.r2) return;
          if (params.sign && r1 == h && lagrangian_family(phi, config) != *params.sign)
            return;
          ++acc;
        });
    std::uint64_t total = 0;
    for (auto s : shards) total += s;
    counts[std::to_string(q)] = total;
    n.push_back(static_cast<double>(total));
  }
  const double ratio = std::log(n[1] / n[0]) /
                       std::log(static_cast<double>(usable[1]) / usable[0]);
  const long estimate = std::lround(ratio);
  std::size_t codim = codimension(params, shape);
  if (opt.mutation == Mutation::perturb_codimension) codim += 2;
  const long dim = static_cast<long>(shape.e * shape.f) - static_cast<long>(codim);
  r.tallies = Json{{"N_q", counts}, {"estimate", estimate}, {"dimension", dim}};
  if (std::labs(estimate - dim) > 1) {
    r.status = CheckStatus::warn;
    r.witness = Json{{"params", to_json(params)},
                     {"estimate", estimate},
                     {"dimension", dim},
                     {"log_ratio", ratio}};
  }
  clock.stamp(r);
  return r;
}

}  // namespace isodet
