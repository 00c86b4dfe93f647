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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "isodet/atlas.hpp"
#include "isodet/cli.hpp"
#include "isodet/verify.hpp"

using namespace isodet;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("isodet_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string without_config(const std::string& text) {
  return text.substr(text.find('\n') + 1);
}

}  // namespace

TEST_CASE("--field grammar") {
  CHECK(cli::parse_field_option("Q").kind == FieldKind::rationals);
  CHECK(cli::parse_field_option("p=5") == FieldDescriptor{FieldKind::prime, 5, 0});
  const auto ext = cli::parse_field_option("p=7,ext=2");
  CHECK(ext.kind == FieldKind::quadratic_extension);
  CHECK(ext.nonresidue == 3);
  CHECK(cli::parse_field_option("p=7,ext=2,d=5").nonresidue == 5);
  for (const char* bad : {"", "p=", "p=5,p=7", "x=3", "p=5,ext=3", "p=5,d=2", "5"})
    CHECK_THROWS_AS(cli::parse_field_option(bad), Error);
  CHECK_THROWS_AS(cli::parse_field_option("p=9"), Error);
}

TEST_CASE("atlas rows") {
  auto r = run({"atlas", "--kind", "alternating", "-e", "2", "-f", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# config {", 0) == 0);
  for (const char* row : {"\n(0,0) ", "\n(1,0) ", "\n(2,0) ", "\n(2,2) "})
    CHECK(r.out.find(row) != std::string::npos);
  CHECK(r.out.find("\n(1,1)") == std::string::npos);

  // Alternating: every row is normal.
  const SpaceConfig<RationalField> alt(2, BilinearForm<RationalField>::split(
                                              RationalField{}, FormKind::alternating, 4));
  const auto t = build_atlas(alt);
  CHECK(t.rows.size() == 4);
  for (const auto& row : t.rows) CHECK(row.facts.normal);

  r = run({"atlas", "--kind", "sym", "-e", "3", "-f", "4"});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("\n(3,2) ");
  REQUIRE(pos != std::string::npos);
  const auto line = r.out.substr(pos + 1, r.out.find('\n', pos + 1) - pos - 1);
  std::istringstream cells(line);
  std::string cls, dim, codim, normal, cm;
  cells >> cls >> dim >> codim >> normal >> cm;
  CHECK(normal == "no");
  CHECK(cm == "yes");
}

TEST_CASE("atlas exceptional rows agree") {
  const SpaceConfig<PrimeField> s(2, BilinearForm<PrimeField>::split(
                                         PrimeField(5), FormKind::symmetric, 4));
  const auto t = build_atlas(s);
  const AtlasRow* plus = nullptr;
  const AtlasRow* minus = nullptr;
  for (const auto& row : t.rows) {
    if (row.params == OrbitParams{2, 0, Sign::plus}) plus = &row;
    if (row.params == OrbitParams{2, 0, Sign::minus}) minus = &row;
  }
  REQUIRE(plus);
  REQUIRE(minus);
  CHECK(plus->facts == minus->facts);
  REQUIRE(plus->generators.size() == minus->generators.size());
  for (std::size_t i = 0; i < plus->generators.size(); ++i) {
    CHECK(plus->generators[i].count == minus->generators[i].count);
    CHECK(plus->generators[i].degree == minus->generators[i].degree);
  }
}

TEST_CASE("atlas JSON round trip") {
  for (const char* kind : {"sym", "alt"})
    for (const char* e : {"1", "2", "3"})
      for (const char* f : {"4", "6"}) {
        const auto text = run({"atlas", "--kind", kind, "-e", e, "-f", f});
        const auto json = run({"atlas", "--kind", kind, "-e", e, "-f", f, "--format", "json"});
        REQUIRE(json.code == 0);
        const Json j = Json::parse(json.out);
        const AtlasTable t = atlas_from_json(j.at("atlas"));
        CHECK(to_json(t) == j.at("atlas"));
        CHECK(render_atlas(t) == without_config(text.out));
        const auto path = temp_file("atlas.json", json.out);
        const auto again = run({"atlas", "--in", path});
        REQUIRE(again.code == 0);
        CHECK(without_config(again.out) == without_config(text.out));
      }
}

TEST_CASE("classify from file") {
  const auto zero = temp_file("zero.json", R"({"rows":[[0,0,0,0],[0,0,0,0]]})");
  auto r = run({"classify", "--kind", "symmetric", "-e", "2", "-f", "4", "--field", "p=5",
                "--in", zero});
  CHECK(r.code == 0);
  CHECK(without_config(r.out).rfind("(0,0)\n", 0) == 0);

  // Field taken from the file when --field is absent.
  const auto tagged = temp_file(
      "tagged.json",
      R"({"field":{"kind":"prime","p":5},"rows":[["1","0","0","0"],["0","1","1","0"]]})");
  r = run({"classify", "--kind", "sym", "--in", tagged, "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("config").at("field_name") == "F_5");
  CHECK(j.at("params") == Json{{"r1", 2}, {"r2", 1}});

  r = run({"classify", "--kind", "sym", "-e", "3", "--in", zero});
  CHECK(r.code == 1);
  r = run({"classify", "--kind", "sym", "--field", "p=7", "--in", tagged});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error").at("code") == "FieldMismatch");
}

TEST_CASE("equations and sample") {
  auto r = run({"equations", "--kind", "alt", "-e", "2", "-f", "4", "--params", "2,0",
                "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.at("generators").size() == 1);
  CHECK(j.at("generators")[0].at("degree") == 2);

  r = run({"equations", "--kind", "sym", "-e", "2", "-f", "4", "--params", "2,0"});
  CHECK(r.code == 1);
  r = run({"equations", "--kind", "sym", "-e", "2", "-f", "4"});
  CHECK(r.code == 2);

  const std::vector<std::string> args{"sample", "--kind", "sym", "-e", "2", "-f", "4",
                                      "--field", "p=11", "--params", "2,0,-",
                                      "--samples", "20", "--seed", "3", "--format", "json"};
  r = run(args);
  REQUIRE(r.code == 0);
  const Json s = Json::parse(r.out);
  REQUIRE(s.at("points").size() == 20);
  const SpaceConfig<PrimeField> space(2, BilinearForm<PrimeField>::split(
                                             PrimeField(11), FormKind::symmetric, 4));
  for (const auto& rows : s.at("points"))
    CHECK(classify(matrix_from_json(rows, space.field()), space) ==
          OrbitParams{2, 0, Sign::minus});
}

TEST_CASE("identical bytes for identical argv") {
  const std::vector<std::vector<std::string>> cases{
      {"sample", "--kind", "alt", "-e", "3", "-f", "6", "--params", "2,2", "--seed", "17"},
      {"verify", "closure", "--kind", "sym", "-e", "2", "-f", "5", "--field", "p=7",
       "--seed", "5", "--samples", "10"},
      {"verify", "cut", "--kind", "alt", "-e", "2", "-f", "4", "--params", "1,0",
       "--samples", "20", "--seed", "2"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto with_seed = cases[0];
  with_seed.back() = "18";
  CHECK(run(with_seed).out != run(cases[0]).out);
}

TEST_CASE("verify exit codes and JSON lines") {
  auto r = run({"verify", "dims", "--kind", "sym", "-e", "2", "-f", "4", "--field", "p=5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(Json::parse(first).contains("config"));
  const auto report = VerificationReport::from_json(Json::parse(second));
  CHECK(report.check == "dims");
  CHECK(report.status == CheckStatus::pass);

  r = run({"verify", "dims", "--kind", "sym", "-e", "2", "-f", "4", "--field", "p=5",
           "--mutate", "perturb-codimension"});
  CHECK(r.code == 3);
  r = run({"verify", "counts", "--kind", "alt", "-e", "2", "-f", "4", "--primes", "3,5",
           "--params", "2,0", "--mutate", "perturb-codimension"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"warn\"") != std::string::npos);
  r = run({"verify", "census", "--kind", "alt", "-e", "2", "-f", "4", "--field", "p=3",
           "--budget", "100"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).at("error").at("code") == "BudgetExceeded");
}

TEST_CASE("solve-congruence") {
  const auto path = temp_file(
      "congruence.json",
      R"({"A":{"rows":[[1,0,0,0],[0,0,1,0]]},"S":{"rows":[[2,1],[1,0]]}})");
  auto r = run({"solve-congruence", "--kind", "sym", "--in", path, "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("residual_zero") == true);
  r = run({"solve-congruence", "--kind", "alt", "--in", path});
  CHECK(r.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"atlas", "-e", "2", "-f", "4"}).code == 2);
  CHECK(run({"atlas", "--kind", "orthogonal", "-e", "2", "-f", "4"}).code == 2);
  CHECK(run({"atlas", "--kind", "sym", "-e", "2", "-f", "4", "--field", "five"}).code == 2);
  CHECK(run({"atlas", "--kind", "sym", "-e", "2", "-f", "4", "--gram", "diag"}).code == 2);
  CHECK(run({"classify", "--kind", "sym", "--in", "/nonexistent/phi.json"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"atlas", "--kind", "sym", "-e", "2", "-f", "4", "--field", "p=2"}).code == 1);
  CHECK(run({"atlas", "--kind", "alt", "-e", "2", "-f", "5"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gram from file") {
  const auto gram = temp_file("gram.json", R"({"rows":[[1,0,0],[0,1,0],[0,0,1]]})");
  auto r = run({"atlas", "--kind", "sym", "-e", "2", "--gram", "file:" + gram,
                "--field", "p=5", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("config").at("f") == 3);
  CHECK(j.at("config").contains("gram_rows"));
  r = run({"atlas", "--kind", "alt", "-e", "2", "--gram", "file:" + gram});
  CHECK(r.code == 1);
}
