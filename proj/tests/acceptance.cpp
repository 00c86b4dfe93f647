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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isodet/verify.hpp"

using namespace isodet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class F>
SpaceConfig<F> split(const F& field, std::size_t e, std::size_t f, FormKind kind) {
  return SpaceConfig<F>(e, BilinearForm<F>::split(field, kind, f));
}

std::vector<SpaceShape> grid(std::size_t max_e, std::size_t min_f, std::size_t max_f) {
  std::vector<SpaceShape> out;
  for (std::size_t e = 1; e <= max_e; ++e)
    for (std::size_t f = min_f; f <= max_f; ++f) {
      out.push_back({e, f, FormKind::symmetric});
      if (f % 2 == 0) out.push_back({e, f, FormKind::alternating});
    }
  return out;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

void within(Outcome& o, const Clock& clock, double limit) {
  const double s = clock.seconds();
  o.detail += " (" + fmt_seconds(s) + ", limit " + fmt_seconds(limit) + ")";
  if (s > limit) o.pass = false;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  Clock clock;
  Outcome o;
  std::size_t classes = 0, mismatches = 0;
  auto run = [&](const auto& field) {
    for (const auto& s : grid(3, 3, 6)) {
      const auto cfg = split(field, s.e, s.f, s.kind);
      for (const auto& p : valid_params(s)) {
        ++classes;
        if (tangent_dimension(representative(p, cfg), cfg) != s.e * s.f - codimension(p, s))
          ++mismatches;
      }
    }
  };
  run(RationalField{});
  run(PrimeField(7));
  o.pass = mismatches == 0;
  o.detail = std::to_string(classes) + " class/field pairs over Q and F_7, " +
             std::to_string(mismatches) + " mismatches";
  within(o, clock, 10);
  return o;
}

Outcome ac2() {
  Clock clock;
  Outcome o;
  const auto alt = exhaustive_census(split(PrimeField(3), 2, 4, FormKind::alternating));
  const auto sym = exhaustive_census(split(PrimeField(5), 2, 4, FormKind::symmetric));
  auto sum = [](const VerificationReport& r) {
    std::uint64_t n = 0;
    for (const auto& [k, v] : r.tallies.at("per_class").items()) n += v.get<std::uint64_t>();
    return n;
  };
  const auto& pc = sym.tallies.at("per_class");
  const std::uint64_t plus = pc.value("(2,0,+)", 0ull), minus = pc.value("(2,0,-)", 0ull);
  o.pass = alt.status == CheckStatus::pass && sym.status == CheckStatus::pass &&
           sum(alt) == 6561 && sum(sym) == 390625 && plus > 0 && plus == minus;
  o.detail = "F_3 alt " + std::to_string(sum(alt)) + "/6561, F_5 sym " +
             std::to_string(sum(sym)) + "/390625, (2,0,+)=" + std::to_string(plus) +
             " (2,0,-)=" + std::to_string(minus);
  within(o, clock, 60);
  return o;
}

Outcome ac3() {
  Clock clock;
  Outcome o;
  std::size_t checks = 0;
  std::uint64_t mismatches = 0;
  bool all_exhaustive = true;
  for (auto kind : {FormKind::symmetric, FormKind::alternating}) {
    const auto cfg = split(PrimeField(5), 2, 4, kind);
    for (const auto& p : valid_params(cfg.shape())) {
      if (p.sign) continue;
      const auto r = check_equation_cut(p, cfg);
      ++checks;
      all_exhaustive &= r.exhaustive;
      mismatches += r.tallies.at("mismatches").get<std::uint64_t>();
      o.pass &= r.status == CheckStatus::pass;
    }
  }
  o.pass &= all_exhaustive && mismatches == 0;
  o.detail = std::to_string(checks) + " classes exhaustive over F_5, " +
             std::to_string(mismatches) + " mismatches";
  within(o, clock, 300);
  return o;
}

template <class F>
bool in_span(const std::vector<Polynomial<F>>& basis, const Polynomial<F>& p) {
  detail::IndependenceFilter<F> filter(p.field());
  for (const auto& b : basis) filter.insert(b);
  return !filter.insert(p);
}

Outcome ac4() {
  Clock clock;
  Outcome o;
  PrimeField f5(5);
  const auto cfg = split(f5, 2, 4, FormKind::symmetric);
  std::uint64_t mismatches = 0;
  for (auto sign : {Sign::plus, Sign::minus}) {
    const auto r = check_equation_cut({2, 0, sign}, cfg);
    o.pass &= r.exhaustive && r.status == CheckStatus::pass;
    mismatches += r.tallies.at("mismatches").get<std::uint64_t>();
  }

  // Orthonormal coordinates: X = columns 1..2, Y = columns 3..4.
  const SpaceConfig<PrimeField> id(2, BilinearForm<PrimeField>::identity(f5, 4));
  const auto x = generic_matrix(id);
  const std::size_t n = id.e() * id.f();
  const auto dx = detail::poly_det(detail::poly_submatrix(x, {0, 1}, {0, 1}), f5, n);
  const auto dy = detail::poly_det(detail::poly_submatrix(x, {0, 1}, {2, 3}), f5, n);
  std::vector<Polynomial<PrimeField>> v[2];
  for (int s = 0; s < 2; ++s) {
    const auto g = component_generators(s == 0 ? Sign::plus : Sign::minus, id);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.labels[i].kind == GeneratorLabel::Kind::component)
        v[s].push_back(g.polynomials[i]);
  }
  const bool plus_sum = in_span(v[0], dx + dy), plus_diff = in_span(v[0], dx - dy);
  const bool minus_sum = in_span(v[1], dx + dy), minus_diff = in_span(v[1], dx - dy);
  const bool split_ok = plus_sum != plus_diff && minus_sum == plus_diff && minus_diff == plus_sum;
  o.pass &= mismatches == 0 && split_ok;
  o.detail = "union/intersection exhaustive over F_5, " + std::to_string(mismatches) +
             " mismatches; V+ holds det X " + (plus_sum ? "+" : "-") + " det Y, V- holds det X " +
             (minus_sum ? "+" : "-") + " det Y";
  within(o, clock, 300);
  return o;
}

template <class F>
std::size_t congruence_failures(const F& field, FormKind kind, std::size_t trials,
                                std::uint64_t seed) {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes =
      kind == FormKind::alternating
          ? std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {2, 4}, {3, 6}, {4, 6}}
          : std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}, {3, 5}, {4, 4}};
  Rng rng(seed);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto [a_rows, f] = shapes[t % shapes.size()];
    const auto form = BilinearForm<F>::split(field, kind, f);
    Matrix<F> a = random_matrix(field, a_rows, f, rng);
    while (rank(a) != a_rows) a = random_matrix(field, a_rows, f, rng);
    const Matrix<F> s = kind == FormKind::alternating ? random_alternating(field, a_rows, rng)
                                                      : random_symmetric(field, a_rows, rng);
    const Matrix<F> b = solve_congruence(s, a, form);
    const auto& k = form.gram();
    if (!(a * k * b.transpose() + b * k * a.transpose() - s).is_zero()) ++failures;
  }
  return failures;
}

Outcome ac5() {
  Clock clock;
  Outcome o;
  std::size_t failures = 0;
  for (auto kind : {FormKind::alternating, FormKind::symmetric}) {
    failures += congruence_failures(PrimeField(7), kind, 500, 51);
    failures += congruence_failures(PrimeField(11), kind, 500, 52);
    failures += congruence_failures(RationalField{}, kind, 500, 53);
  }
  o.pass = failures == 0;
  o.detail = "3000 instances (500 per kind per field F_7, F_11, Q), " +
             std::to_string(failures) + " nonzero residuals";
  return o;
}

template <class F>
std::size_t pfaffian_failures(const F& field, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t failures = 0;
  for (std::size_t n = 2; n <= 8; n += 2) {
    for (int t = 0; t < 200; ++t) {
      const Matrix<F> m = random_alternating(field, n, rng);
      const typename F::Scalar p = pfaffian(m);
      if (!(p * p == det(m))) ++failures;
    }
    if (!(pfaffian(BilinearForm<F>::split(field, FormKind::alternating, n).gram()) ==
          field.one()))
      ++failures;
  }
  return failures;
}

Outcome ac6() {
  Outcome o;
  std::size_t failures = pfaffian_failures(PrimeField(7), 61) +
                         pfaffian_failures(PrimeField(1000003), 62) +
                         pfaffian_failures(QuadraticField(7), 63) +
                         pfaffian_failures(RationalField{}, 64);
  o.pass = failures == 0;
  o.detail = "sizes 2..8 x 200 in F_7, F_1000003, F_49, Q plus pf(J) = 1, " +
             std::to_string(failures) + " failures";
  return o;
}

template <class F>
Matrix<F> improper_swap(const F& field, std::size_t f) {
  Matrix<F> p = Matrix<F>::identity(field, f);
  p(0, 0) = p(f - 1, f - 1) = field.zero();
  p(0, f - 1) = p(f - 1, 0) = field.one();
  return p;
}

template <class F>
void invariance(const F& field, const std::vector<SpaceShape>& shapes, std::size_t& points,
                std::size_t& violations, std::size_t& flips) {
  for (const auto& s : shapes) {
    const auto cfg = split(field, s.e, s.f, s.kind);
    for (const auto& p : valid_params(s)) {
      const Matrix<F> rep = representative(p, cfg);
      for (std::uint64_t t = 0; t < 200; ++t) {
        const std::uint64_t seed = mix_seed(p.r1 * 100 + p.r2 * 10 + s.e + 7 * s.f, t);
        Rng rng(seed);
        const Matrix<F> a = random_invertible(field, s.e, rng);
        const auto b = random_isometry(cfg.form(), cfg.lie(), mix_seed(seed, 1));
        const Matrix<F> moved = a * rep * b.matrix.transpose();
        ++points;
        if (!(classify(moved, cfg) == p)) ++violations;
        if (p.sign) {
          ++flips;
          const Matrix<F> swapped = moved * improper_swap(field, s.f).transpose();
          if (!(classify(swapped, cfg) == OrbitParams{p.r1, p.r2, flip(*p.sign)})) ++violations;
        }
      }
    }
  }
}

Outcome ac7() {
  Clock clock;
  Outcome o;
  std::size_t points = 0, violations = 0, flips = 0;
  invariance(PrimeField(7), grid(3, 3, 6), points, violations, flips);
  invariance(RationalField{},
             {{2, 4, FormKind::symmetric}, {2, 4, FormKind::alternating},
              {3, 6, FormKind::symmetric}},
             points, violations, flips);
  o.pass = violations == 0 && flips > 0;
  o.detail = std::to_string(points) + " moved points, " + std::to_string(flips) +
             " improper flips, " + std::to_string(violations) + " violations";
  return o;
}

struct FactsRow {
  SpaceShape shape;
  OrbitParams params;
  std::optional<bool> normal, rational_char0;
  std::optional<Ternary> cm, gorenstein, sfr;
};

Outcome ac8() {
  using T = Ternary;
  constexpr auto A = FormKind::alternating;
  constexpr auto S = FormKind::symmetric;
  const std::vector<FactsRow> rows{
      {{2, 4, A}, {1, 0, {}}, true, true, {}, {}, T::yes},
      {{2, 4, A}, {2, 2, {}}, true, true, {}, T::yes, T::yes},
      {{3, 4, A}, {2, 2, {}}, true, true, {}, T::unknown, T::unknown},
      {{4, 6, A}, {4, 2, {}}, true, true, {}, T::yes, T::unknown},
      {{3, 4, S}, {3, 2, {}}, false, {}, T::yes, {}, {}},
      {{4, 6, S}, {4, 2, {}}, false, {}, T::yes, {}, {}},
      {{5, 4, S}, {3, 2, {}}, false, {}, T::no, {}, {}},
      {{3, 4, S}, {1, 0, {}}, true, true, T::yes, {}, T::yes},
      {{2, 5, S}, {2, 1, {}}, true, {}, {}, T::yes, {}},
      {{3, 5, S}, {3, 1, {}}, false, false, T::yes, T::no, {}},
      {{3, 5, S}, {3, 3, {}}, true, {}, {}, T::yes, {}},
      {{2, 4, S}, {2, 0, Sign::plus}, true, true, T::yes, T::unknown, T::yes},
  };
  Outcome o;
  std::size_t bad = 0;
  for (const auto& r : rows) {
    const auto f = facts(r.params, r.shape);
    bool ok = true;
    if (r.normal) ok &= f.normal == *r.normal;
    if (r.rational_char0) ok &= f.rational_singularities_char0 == *r.rational_char0;
    if (r.cm) ok &= f.cohen_macaulay == *r.cm;
    if (r.gorenstein) ok &= f.gorenstein == *r.gorenstein;
    if (r.sfr) ok &= f.strongly_f_regular == *r.sfr;
    if (!ok) {
      ++bad;
      o.detail += " mismatch " + std::string(to_string(r.shape.kind)) + " e=" +
                  std::to_string(r.shape.e) + " f=" + std::to_string(r.shape.f) + " " +
                  to_string(r.params) + ";";
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(rows.size()) + " rows, " + std::to_string(bad) + " mismatches" +
             o.detail;
  return o;
}

Outcome ac9() {
  Clock clock;
  Outcome o;
  auto mutated = [](Mutation m) {
    VerifyOptions opt;
    opt.mutation = m;
    opt.samples = 50;
    return opt;
  };
  auto failed_with_witness = [](const VerificationReport& r) {
    return r.status == CheckStatus::fail && !r.witness.is_null();
  };
  const auto f3 = split(PrimeField(3), 2, 4, FormKind::symmetric);
  const auto f7 = split(PrimeField(7), 2, 4, FormKind::symmetric);
  std::vector<std::pair<std::string, bool>> results{
      {"census", failed_with_witness(exhaustive_census(f3, mutated(Mutation::drop_class)))},
      {"cut", failed_with_witness(
                  check_equation_cut({1, 0, {}}, f3, mutated(Mutation::drop_generator)))},
      {"dims", failed_with_witness(check_dimensions(f7, mutated(Mutation::perturb_codimension)))},
      {"closure",
       failed_with_witness(check_closure_order(f7, mutated(Mutation::corrupt_closure)))},
  };
  const auto counts = point_count_dimension_estimate(
      {2, 0, {}}, {2, 4, FormKind::alternating}, {3, 5},
      mutated(Mutation::perturb_codimension));
  results.push_back({"counts(warn)", counts.status == CheckStatus::warn});
  const auto clean = exhaustive_census(f3);
  results.push_back({"clean census", clean.status == CheckStatus::pass});
  for (const auto& [name, ok] : results) {
    o.pass &= ok;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += name + (ok ? " ok" : " NOT DETECTED");
  }
  within(o, clock, 120);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 dimension formulas", ac1},
      {"AC2 orbit exhaustion", ac2},
      {"AC3 rank-condition equations", ac3},
      {"AC4 exceptional components", ac4},
      {"AC5 congruence solver", ac5},
      {"AC6 Pfaffian", ac6},
      {"AC7 invariance", ac7},
      {"AC8 facts table", ac8},
      {"AC9 mutation sanity", ac9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
