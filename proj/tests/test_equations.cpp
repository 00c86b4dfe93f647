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
#include "isodet/equations.hpp"

using namespace isodet;

namespace {

template <class F>
SpaceConfig<F> split_config(const F& field, std::size_t e, std::size_t f,
                            FormKind kind) {
  return SpaceConfig<F>(e, BilinearForm<F>::split(field, kind, f));
}

template <class F>
bool in_span(const std::vector<Polynomial<F>>& basis, const Polynomial<F>& p) {
  detail::IndependenceFilter<F> filter(p.field());
  for (const auto& b : basis) filter.insert(b);
  return !filter.insert(p);
}

template <class F>
Polynomial<F> block_det(const SpaceConfig<F>& cfg, std::size_t first_col) {
  const auto x = generic_matrix(cfg);
  return detail::poly_det(
      detail::poly_submatrix(x, {0, 1}, {first_col, first_col + 1}),
      cfg.field(), cfg.e() * cfg.f());
}

}  // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  PrimeField f5(5);
  const auto x = Polynomial<PrimeField>::variable(f5, 4, 0);
  const auto y = Polynomial<PrimeField>::variable(f5, 4, 1);
  const auto p = x * y - y * x;
  CHECK(p.is_zero());
  CHECK(p.render(2) == "0");
  const auto q = x * x + f5.from_int(4) * y;
  CHECK(q.render(2) == "x11^2 - x12");
  CHECK_FALSE(q.is_homogeneous());
  CHECK((x * y).is_homogeneous());
  CHECK((x * y).degree() == 2);
  const std::vector<Fp> pt{f5.from_int(2), f5.from_int(3), f5.zero(), f5.zero()};
  CHECK(q.evaluate(pt) == f5.from_int(4 - 3));
  CHECK(CompiledPolynomial<PrimeField>(q).evaluate(pt) == q.evaluate(pt));
  CHECK(variable_name(0, 4) == "x11");
  CHECK(variable_name(7, 4) == "x24");
  CHECK(variable_name(9, 10) == "x1_10");

  RationalField qq;
  const auto r = Polynomial<RationalField>::variable(qq, 2, 0);
  CHECK((Rational(-3, 2) * r).render(1) == "-3/2*x11");
  CHECK(Polynomial<RationalField>::constant(qq, 2, Rational(0)).is_zero());
  QuadraticField f49(7);
  const auto w = Polynomial<QuadraticField>::variable(f49, 1, 0);
  CHECK((f49.make(1, 2) * w).render(1) == "(1+2*w)*x11");
}

TEST_CASE("generic psi") {
  PrimeField f7(7);
  const SpaceConfig<PrimeField> id(1, BilinearForm<PrimeField>::identity(f7, 3));
  CHECK(generic_psi(id)[0][0].render(3) == "x11^2 + x12^2 + x13^2");

  const auto alt = split_config(f7, 3, 4, FormKind::alternating);
  const auto pa = generic_psi(alt);
  for (std::size_t i = 0; i < 3; ++i) CHECK(pa[i][i].is_zero());

  for (auto kind : {FormKind::symmetric, FormKind::alternating}) {
    const auto cfg = split_config(f7, 3, 4, kind);
    const auto gp = generic_psi(cfg);
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
      const auto phi = random_matrix(f7, 3, 4, rng);
      const auto direct = psi(phi, cfg.form());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          CHECK(evaluate(gp[i][j], phi) == direct(i, j));
    }
  }
}

TEST_CASE("rank condition generator examples") {
  RationalField q;
  const auto alt = split_config(q, 2, 4, FormKind::alternating);
  CHECK(rank_condition_generators({2, 2, {}}, alt).empty());
  const auto g = rank_condition_generators({2, 0, {}}, alt);
  REQUIRE(g.size() == 1);
  CHECK(g.polynomials[0].degree() == 2);
  CHECK(g.labels[0].kind == GeneratorLabel::Kind::psi_pfaffian);
  CHECK(g.polynomials[0] == generic_psi(alt)[0][1]);

  const auto sym = split_config(q, 2, 3, FormKind::symmetric);
  const auto s = rank_condition_generators({1, 0, {}}, sym);
  CHECK(s.size() == 6);
  std::size_t minors = 0;
  for (const auto& l : s.labels) minors += l.kind == GeneratorLabel::Kind::minor;
  CHECK(minors == 3);

  const auto sym24 = split_config(q, 2, 4, FormKind::symmetric);
  CHECK_THROWS_AS(rank_condition_generators({2, 0, {}}, sym24), Error);
  CHECK_THROWS_AS(rank_condition_generators({2, 0, Sign::plus}, sym24), Error);
  CHECK_THROWS_AS(rank_condition_generators({3, 0, {}}, sym24), Error);
  CHECK(to_string(s.labels[0]) == "minor(T=[0,1],S=[0,1])");
}

TEST_CASE("star operator") {
  RationalField q;
  const auto f2 = star_operator(BilinearForm<RationalField>::split(q, FormKind::symmetric, 2));
  CHECK(f2.mu_squared == 1);

  PrimeField f5(5);
  const auto id2 = star_operator(BilinearForm<PrimeField>::identity(f5, 2));
  // basis {0}, {1}: star(e1) = e2, star(e2) = -e1.
  CHECK(id2.matrix(1, 0) == f5.one());
  CHECK(id2.matrix(0, 1) == -f5.one());
  CHECK(id2.mu_squared == -f5.one());

  PrimeField f7(7);
  CHECK_THROWS_AS(star_operator(BilinearForm<PrimeField>::identity(f7, 2)), Error);
  CHECK_THROWS_AS(star_operator(BilinearForm<PrimeField>::split(f7, FormKind::alternating, 4)),
                  Error);
  CHECK_THROWS_AS(star_operator(BilinearForm<PrimeField>::identity(f7, 3)), Error);

  QuadraticField f49(7);
  for (std::size_t f : {2u, 4u, 6u})
    for (const auto& form : {BilinearForm<QuadraticField>::identity(f49, f),
                             BilinearForm<QuadraticField>::split(f49, FormKind::symmetric, f)}) {
      const auto st = star_operator(form);
      const auto n = st.basis.size();
      const auto id = Matrix<QuadraticField>::identity(f49, n);
      CHECK(st.matrix * st.matrix == st.mu_squared * id);
      CHECK(st.mu * st.mu == st.mu_squared);
      const auto inv = f49.one() / st.mu;
      const auto pp = st.projector(inv), pm = st.projector(-inv);
      CHECK(pp + pm == id);
      CHECK(pp * pp == pp);
      CHECK(pm * pm == pm);
      CHECK((pp * pm).is_zero());
    }
}

TEST_CASE("component generators") {
  PrimeField f5(5);
  const auto cfg = split_config(f5, 2, 4, FormKind::symmetric);
  const auto plus = component_generators(Sign::plus, cfg);
  const auto minus = component_generators(Sign::minus, cfg);
  const auto rp = representative({2, 0, Sign::plus}, cfg);
  const auto rm = representative({2, 0, Sign::minus}, cfg);
  CHECK(evaluate(plus, rp));
  CHECK(evaluate(minus, rm));
  CHECK_FALSE(evaluate(plus, rm));
  CHECK_FALSE(evaluate(minus, rp));
  bool some_v_nonzero = false;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    if (plus.labels[i].kind == GeneratorLabel::Kind::quadratic_invariant)
      CHECK(evaluate(plus.polynomials[i], rm) == f5.zero());
    else if (!(evaluate(plus.polynomials[i], rm) == f5.zero()))
      some_v_nonzero = true;
  }
  CHECK(some_v_nonzero);

  for (const auto& set : {plus, minus})
    for (std::size_t i = 0; i < set.size(); ++i) {
      const auto& l = set.labels[i];
      CHECK(set.polynomials[i].is_homogeneous());
      CHECK(set.polynomials[i].degree() == 2);  // quadrics and f/2 = 2 minors
      CHECK(generator_from_label(l, cfg) == set.polynomials[i]);
    }

  CHECK_THROWS_AS(component_generators(Sign::plus, split_config(f5, 1, 4, FormKind::symmetric)),
                  Error);
  CHECK_THROWS_AS(component_generators(Sign::plus, split_config(f5, 2, 4, FormKind::alternating)),
                  Error);
}

TEST_CASE("identity Gram: V spans contain det(X) +- det(Y)") {
  PrimeField f5(5);
  const SpaceConfig<PrimeField> cfg(2, BilinearForm<PrimeField>::identity(f5, 4));
  const auto dx = block_det(cfg, 0), dy = block_det(cfg, 2);
  std::vector<Polynomial<PrimeField>> vp, vm;
  for (auto [sign, out] : {std::pair{Sign::plus, &vp}, std::pair{Sign::minus, &vm}}) {
    const auto g = component_generators(sign, cfg);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.labels[i].kind == GeneratorLabel::Kind::component)
        out->push_back(g.polynomials[i]);
  }
  const bool plus_has_sum = in_span(vp, dx + dy), plus_has_diff = in_span(vp, dx - dy);
  const bool minus_has_sum = in_span(vm, dx + dy), minus_has_diff = in_span(vm, dx - dy);
  CHECK(plus_has_sum != plus_has_diff);
  CHECK(minus_has_sum == plus_has_diff);
  CHECK(minus_has_diff == plus_has_sum);
}

TEST_CASE("generator degrees and label determinism") {
  PrimeField f5(5);
  for (auto kind : {FormKind::symmetric, FormKind::alternating})
    for (std::size_t e = 1; e <= 3; ++e) {
      const auto cfg = split_config(f5, e, 4, kind);
      for (const auto& p : valid_params(cfg.shape())) {
        const auto g = orbit_generators(p, cfg);
        for (std::size_t i = 0; i < g.size(); ++i) {
          const auto& l = g.labels[i];
          const auto& poly = g.polynomials[i];
          CHECK(poly.is_homogeneous());
          using K = GeneratorLabel::Kind;
          switch (l.kind) {
            case K::minor: CHECK(poly.degree() == l.rows.size()); break;
            case K::psi_minor: CHECK(poly.degree() == 2 * (p.r2 + 1)); break;
            case K::psi_pfaffian: CHECK(poly.degree() == p.r2 + 2); break;
            case K::quadratic_invariant: CHECK(poly.degree() == 2); break;
            case K::component: CHECK(poly.degree() == cfg.f() / 2); break;
          }
          CHECK(generator_from_label(l, cfg) == poly);
        }
      }
    }
}

TEST_CASE("minor labels evaluate to matrix minors") {
  PrimeField f7(7);
  const auto cfg = split_config(f7, 3, 4, FormKind::symmetric);
  const auto g = rank_condition_generators({1, 1, {}}, cfg);
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto phi = random_matrix(f7, 3, 4, rng);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.labels[i].kind == GeneratorLabel::Kind::minor)
        CHECK(evaluate(g.polynomials[i], phi) ==
              minor(phi, g.labels[i].rows, g.labels[i].cols));
  }
  CHECK(evaluate(Polynomial<PrimeField>(f7, 12), random_matrix(f7, 3, 4, rng)) == f7.zero());
  CHECK_THROWS_AS(evaluate(g.polynomials[0], Matrix<PrimeField>(f7, 2, 4)), Error);
}

TEST_CASE("sampled vanishing matches closure order") {
  PrimeField f7(7);
  for (std::size_t e = 1; e <= 3; ++e)
    for (std::size_t f = 3; f <= 5; ++f)
      for (auto kind : {FormKind::symmetric, FormKind::alternating}) {
        if (kind == FormKind::alternating && f % 2) continue;
        const auto cfg = split_config(f7, e, f, kind);
        const auto params = valid_params(cfg.shape());
        std::vector<CompiledGenerators<PrimeField>> gens;
        for (const auto& p : params) gens.emplace_back(orbit_generators(p, cfg));
        for (const auto& q : params)
          for (std::uint64_t t = 0; t < 100; ++t) {
            const auto pt = random_orbit_point(q, cfg, mix_seed(e * 100 + f, t));
            for (std::size_t k = 0; k < params.size(); ++k)
              CHECK(gens[k].all_vanish(pt.data()) == closure_leq(q, params[k], cfg.shape()));
          }
      }
}
