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

#include "doctest.h"
#include "isodet/verify.hpp"

using namespace isodet;

namespace {

SpaceConfig<PrimeField> split(std::uint32_t p, std::size_t e, std::size_t f,
                              FormKind kind) {
  return SpaceConfig<PrimeField>(e, BilinearForm<PrimeField>::split(PrimeField(p), kind, f));
}

}  // namespace

TEST_CASE("census examples") {
  const auto alt = exhaustive_census(split(3, 2, 4, FormKind::alternating));
  CHECK(alt.status == CheckStatus::pass);
  CHECK(alt.tallies["matrices"] == 6561);
  CHECK(alt.tallies["classes_hit"] == 4);

  const auto tiny = exhaustive_census(split(3, 1, 3, FormKind::symmetric));
  CHECK(tiny.status == CheckStatus::pass);
  CHECK(tiny.tallies["per_class"]["(0,0)"] == 1);

  const auto sym = exhaustive_census(split(5, 2, 4, FormKind::symmetric));
  CHECK(sym.status == CheckStatus::pass);
  CHECK(sym.tallies["matrices"] == 390625);
  CHECK(sym.tallies["per_class"]["(2,0,+)"] == sym.tallies["per_class"]["(2,0,-)"]);
  CHECK(sym.tallies["per_class"]["(2,0,+)"].get<std::uint64_t>() > 0);

  VerifyOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(exhaustive_census(split(3, 2, 4, FormKind::alternating), tight), Error);
}

TEST_CASE("census is independent of thread count") {
  const auto cfg = split(3, 2, 4, FormKind::symmetric);
  VerifyOptions one, many;
  one.threads = 1;
  many.threads = 7;
  CHECK(exhaustive_census(cfg, one).to_json() == exhaustive_census(cfg, many).to_json());
}

TEST_CASE("equation cut") {
  const auto alt = split(5, 2, 4, FormKind::alternating);
  const auto r = check_equation_cut({2, 0, {}}, alt);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.exhaustive);
  CHECK(r.tallies["visited"] == 390625);

  const auto sym = split(3, 2, 4, FormKind::symmetric);
  for (auto s : {Sign::plus, Sign::minus}) {
    const auto x = check_equation_cut({2, 0, s}, sym);
    CHECK(x.status == CheckStatus::pass);
  }
  for (const auto& p : valid_params(sym.shape()))
    CHECK(check_equation_cut(p, sym).status == CheckStatus::pass);

  VerifyOptions drop;
  drop.mutation = Mutation::drop_generator;
  const auto bad = check_equation_cut({2, 0, {}}, alt, drop);
  CHECK(bad.status == CheckStatus::fail);
  CHECK(bad.witness.contains("matrix"));
  CHECK(check_equation_cut({1, 0, {}}, sym, drop).status == CheckStatus::fail);
  CHECK(check_equation_cut({2, 0, Sign::plus}, sym, drop).status == CheckStatus::fail);
}

TEST_CASE("equation cut falls back to sampling") {
  VerifyOptions opt;
  opt.budget = 100;
  opt.samples = 20;
  const auto r = check_equation_cut({1, 1, {}}, split(5, 2, 4, FormKind::symmetric), opt);
  CHECK(r.status == CheckStatus::pass);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.notes.size() == 1);

  RationalField q;
  const SpaceConfig<RationalField> cq(2, BilinearForm<RationalField>::split(q, FormKind::symmetric, 4));
  for (const auto& p : valid_params(cq.shape()))
    CHECK(check_equation_cut(p, cq, opt).status == CheckStatus::pass);
}

TEST_CASE("dimensions") {
  CHECK(check_dimensions(split(7, 3, 6, FormKind::alternating)).status == CheckStatus::pass);
  CHECK(check_dimensions(split(7, 3, 5, FormKind::symmetric)).status == CheckStatus::pass);
  VerifyOptions bad;
  bad.mutation = Mutation::perturb_codimension;
  const auto r = check_dimensions(split(7, 2, 4, FormKind::alternating), bad);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.tallies["mismatches"] == r.tallies["classes"]);
}

TEST_CASE("closure order") {
  VerifyOptions opt;
  opt.seed = 3;
  const auto alt = check_closure_order(split(5, 2, 4, FormKind::alternating), opt);
  CHECK(alt.status == CheckStatus::pass);
  CHECK_FALSE(alt.exhaustive);
  CHECK(alt.tallies["points"] == 400);
  CHECK(check_closure_order(split(5, 2, 4, FormKind::symmetric), opt).status ==
        CheckStatus::pass);
  opt.mutation = Mutation::corrupt_closure;
  const auto bad = check_closure_order(split(5, 2, 4, FormKind::alternating), opt);
  CHECK(bad.status == CheckStatus::fail);
  CHECK(bad.witness.contains("p"));
}

TEST_CASE("point counts") {
  const SpaceShape s{2, 4, FormKind::alternating};
  const auto dense = point_count_dimension_estimate({2, 2, {}}, s, {3, 5});
  CHECK(dense.tallies["estimate"] == 8);
  CHECK(dense.status == CheckStatus::pass);
  const auto zero = point_count_dimension_estimate({0, 0, {}}, s, {3, 5});
  CHECK(zero.tallies["estimate"] == 0);
  CHECK(zero.tallies["N_q"]["3"] == 1);
  const auto mid = point_count_dimension_estimate({2, 0, {}}, s, {3, 5});
  CHECK(mid.status == CheckStatus::pass);
  CHECK(std::labs(mid.tallies["estimate"].get<long>() - 7) <= 1);
  VerifyOptions bad;
  bad.mutation = Mutation::perturb_codimension;
  CHECK(point_count_dimension_estimate({2, 0, {}}, s, {3, 5}, bad).status == CheckStatus::warn);
  CHECK_THROWS_AS(point_count_dimension_estimate({2, 0, {}}, s, {3}), Error);
  CHECK_THROWS_AS(point_count_dimension_estimate({2, 0, {}}, s, {3, 4}), Error);
}

TEST_CASE("census mutation") {
  VerifyOptions bad;
  bad.mutation = Mutation::drop_class;
  const auto r = exhaustive_census(split(3, 2, 4, FormKind::alternating), bad);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.witness.contains("matrix"));
}

TEST_CASE("reports serialize and are reproducible") {
  const auto cfg = split(3, 2, 4, FormKind::symmetric);
  VerifyOptions opt;
  opt.seed = 9;
  opt.samples = 10;
  const auto a = run_all(cfg, opt, {3, 5});
  const auto b = run_all(cfg, opt, {3, 5});
  CHECK(to_json_lines(a) == to_json_lines(b));
  CHECK_FALSE(any_hard_fail(a));
  for (const auto& r : a) {
    const auto back = VerificationReport::from_json(r.to_json());
    CHECK(back.to_json() == r.to_json());
  }
  const auto table = summary_table(a);
  CHECK(table.find("census") != std::string::npos);
  CHECK(table.find("sym e=2 f=4 F_3") != std::string::npos);
  CHECK(parse_mutation("drop-generator") == Mutation::drop_generator);
  CHECK_THROWS_AS(parse_mutation("nope"), Error);
}
