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
 * @file verify.hpp
 * @brief Verification harness: exhaustive sweeps over F_q^{e x f} and
 * sampled checks, each tied to an independent oracle.
 *
 * Exhaustive sweeps visit matrices with an odometer over the entries in
 * row-major order (last entry fastest). The leading entries select a shard;
 * shards run on worker threads and are merged in shard order, so reports do
 * not depend on scheduling.
 */

#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "isodet/equations.hpp"
#include "isodet/json_io.hpp"

namespace isodet {

enum class CheckStatus { pass, fail, warn };
std::string_view to_string(CheckStatus s) noexcept;

/// Deliberate corruptions used by the harness self-tests.
enum class Mutation {
  none,
  drop_generator,       ///< cut: remove the first generator
  perturb_codimension,  ///< dims: codim + 1; counts: codim + 2
  drop_class,           ///< census: forget the last valid label
  corrupt_closure,      ///< closure: compare r1 only
};
std::string_view to_string(Mutation m) noexcept;
Mutation parse_mutation(std::string_view text);

struct VerifyOptions {
  std::uint64_t budget = 10'000'000;  ///< matrix visits per exhaustive check
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;  ///< 0: hardware concurrency
  bool timing = false;   ///< record wall time (makes reports non-reproducible)
  Mutation mutation = Mutation::none;
};

struct VerificationReport {
  std::string check;
  Json config = Json::object();
  bool exhaustive = true;
  std::size_t samples = 0;  ///< sampled mode only
  std::uint64_t seed = 0;   ///< sampled mode only
  CheckStatus status = CheckStatus::pass;
  Json witness;  ///< null on pass
  Json tallies = Json::object();
  std::vector<std::string> notes;
  std::optional<double> wall_seconds;

  Json to_json() const;
  static VerificationReport from_json(const Json& j);
};

/// One JSON object per line.
std::string to_json_lines(const std::vector<VerificationReport>& reports);
/// Fixed-width human table.
std::string summary_table(const std::vector<VerificationReport>& reports);
bool any_hard_fail(const std::vector<VerificationReport>& reports);

template <ExactField F>
Json config_to_json(const SpaceConfig<F>& config) {
  Json form = to_json(config.form());
  return Json{{"e", config.e()},
              {"f", config.f()},
              {"kind", std::string(to_string(config.kind()))},
              {"field", to_json(config.field().descriptor())},
              {"gram", form["gram"]}};
}

namespace detail {

inline unsigned resolve_threads(unsigned t) {
  if (t != 0) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// q^n, or nullopt past 2^63.
inline std::optional<std::uint64_t> checked_power(std::uint64_t q,
                                                  std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > (std::uint64_t{1} << 63) / q) return std::nullopt;
    r *= q;
  }
  return r;
}

template <FiniteField F>
std::uint64_t require_budget(const F& field, std::size_t e, std::size_t f,
                             std::uint64_t budget) {
  const auto total = checked_power(field.size(), e * f);
  if (!total || *total > budget)
    fail(ErrorCode::BudgetExceeded,
         std::to_string(field.size()) + "^" + std::to_string(e * f) +
             " matrices exceed the budget of " + std::to_string(budget));
  return *total;
}

/// Runs visit(acc, phi) over every e x f matrix. Returns one accumulator per
/// shard, in shard order.
template <FiniteField F, class Acc, class Visit>
std::vector<Acc> sweep(const F& field, std::size_t e, std::size_t f,
                       unsigned threads, const Acc& init, Visit visit) {
  const std::uint64_t q = field.size();
  const std::size_t n = e * f;
  threads = resolve_threads(threads);
  std::size_t prefix = 0;
  std::uint64_t shards = 1;
  while (prefix < n && shards < 8ULL * threads) {
    shards *= q;
    ++prefix;
  }
  std::vector<Acc> results(shards, init);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      Matrix<F> phi(field, e, f);
      std::vector<std::uint64_t> digits(n, 0);
      auto set = [&](std::size_t k) { phi(k / f, k % f) = field.element(digits[k]); };
      for (std::uint64_t shard; (shard = next++) < shards;) {
        std::uint64_t x = shard;
        for (std::size_t k = prefix; k-- > 0;) {
          digits[k] = x % q;
          x /= q;
        }
        for (std::size_t k = prefix; k < n; ++k) digits[k] = 0;
        for (std::size_t k = 0; k < n; ++k) set(k);
        Acc& acc = results[shard];
        while (true) {
          visit(acc, static_cast<const Matrix<F>&>(phi));
          std::size_t k = n;
          bool advanced = false;
          while (k > prefix) {
            --k;
            if (++digits[k] < q) {
              set(k);
              advanced = true;
              break;
            }
            digits[k] = 0;
            set(k);
          }
          if (!advanced) break;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = shards;
    }
  };

  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, shards));
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void stamp(VerificationReport& r) const {
    if (!on_) return;
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

/// Representative, or nullopt when the form's Witt index is too small.
template <ExactField F>
std::optional<Matrix<F>> try_representative(const OrbitParams& p,
                                            const SpaceConfig<F>& config) {
  try {
    return representative(p, config);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientWittIndex) throw;
    return std::nullopt;
  }
}

inline void set_sampled(VerificationReport& r, const VerifyOptions& opt) {
  r.exhaustive = false;
  r.samples = opt.samples;
  r.seed = opt.seed;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Census

/// Classifies every matrix over a finite field; every label must be valid,
/// tallies must sum to q^{ef}, every class with a representative must be
/// hit, and the two exceptional classes must have equal tallies.
template <FiniteField F>
VerificationReport exhaustive_census(const SpaceConfig<F>& config,
                                     const VerifyOptions& opt = {}) {
  detail::Stopwatch clock(opt.timing);
  const std::uint64_t total =
      detail::require_budget(config.field(), config.e(), config.f(), opt.budget);
  auto valid = valid_params(config.shape());
  if (opt.mutation == Mutation::drop_class && !valid.empty()) valid.pop_back();

  struct Acc {
    std::map<OrbitParams, std::uint64_t> tally;
    std::uint64_t visited = 0;
    std::optional<Matrix<F>> bad;
  };
  const auto shards = detail::sweep(
      config.field(), config.e(), config.f(), opt.threads, Acc{},
      [&](Acc& acc, const Matrix<F>& phi) {
        ++acc.visited;
        const auto p = classify(phi, config);
        ++acc.tally[p];
        if (!acc.bad && std::find(valid.begin(), valid.end(), p) == valid.end())
          acc.bad = phi;
      });

  VerificationReport r;
  r.check = "census";
  r.config = config_to_json(config);
  std::map<OrbitParams, std::uint64_t> tally;
  std::uint64_t visited = 0;
  for (const auto& s : shards) {
    visited += s.visited;
    for (const auto& [p, n] : s.tally) tally[p] += n;
    if (s.bad && r.witness.is_null()) {
      r.status = CheckStatus::fail;
      r.witness = Json{{"reason", "label outside the valid list"},
                       {"matrix", to_json(*s.bad)},
                       {"classified_as", to_string(classify(*s.bad, config))}};
    }
  }
  std::uint64_t sum = 0;
  Json per_class = Json::object();
  for (const auto& [p, n] : tally) {
    per_class[to_string(p)] = n;
    sum += n;
  }
  r.tallies = Json{{"matrices", visited},
                   {"expected", total},
                   {"classes_hit", tally.size()},
                   {"valid_classes", valid_params(config.shape()).size()},
                   {"per_class", per_class}};
  if (r.status == CheckStatus::pass && (sum != total || visited != total)) {
    r.status = CheckStatus::fail;
    r.witness = Json{{"reason", "tallies do not sum to q^(ef)"},
                     {"sum", sum}, {"expected", total}};
  }
  if (r.status == CheckStatus::pass)
    for (const auto& p : valid_params(config.shape()))
      if (!tally.contains(p) && detail::try_representative(p, config)) {
        r.status = CheckStatus::fail;
        r.witness = Json{{"reason", "class with a representative was never hit"},
                         {"params", to_json(p)}};
        break;
      }
  if (r.status == CheckStatus::pass) {
    const std::size_t h = config.f() / 2;
    const OrbitParams plus{h, 0, Sign::plus}, minus{h, 0, Sign::minus};
    if (tally.contains(plus) || tally.contains(minus)) {
      const auto np = tally.contains(plus) ? tally.at(plus) : 0;
      const auto nm = tally.contains(minus) ? tally.at(minus) : 0;
      if (np != nm) {
        r.status = CheckStatus::fail;
        r.witness = Json{{"reason", "exceptional tallies differ"},
                         {"plus", np}, {"minus", nm}};
      }
    }
  }
  clock.stamp(r);
  return r;
}

// ---------------------------------------------------------------------------
// Equation cut

namespace detail {

/// Compares generator zero sets with the rank-condition locus at one point.
template <ExactField F>
class CutProbe {
 public:
  CutProbe(const OrbitParams& params, const SpaceConfig<F>& config,
           Mutation mutation)
      : params_(params), config_(config) {
    if (!is_valid(params, config.shape()))
      fail(ErrorCode::InvalidParams, to_string(params));
    auto corrupt = [&](GeneratorSet<F> g) {
      if (mutation == Mutation::drop_generator && !g.empty()) {
        g.polynomials.erase(g.polynomials.begin());
        g.labels.erase(g.labels.begin());
      }
      return g;
    };
    if (params.sign) {
      const auto own = corrupt(component_generators(*params.sign, config));
      const auto other = component_generators(flip(*params.sign), config);
      own_.emplace(own);
      other_.emplace(other);
      generator_count_ = own.size() + other.size();
    } else {
      const auto g = corrupt(rank_condition_generators(params, config));
      own_.emplace(g);
      generator_count_ = g.size();
    }
  }

  struct Outcome {
    bool in_locus = false;
    bool vanishes = false;
    const char* mismatch = nullptr;
  };

  Outcome probe(const Matrix<F>& phi) const {
    const std::size_t r1 = rank(phi);
    const std::size_t r2 = r1 == 0 ? 0 : isotropic_rank(phi, config_.form());
    Outcome out;
    if (!params_.sign) {
      out.in_locus = r1 <= params_.r1 && r2 <= params_.r2;
      out.vanishes = own_->all_vanish(phi.data());
      if (out.in_locus != out.vanishes)
        out.mismatch = "zero set differs from the rank-condition locus";
      return out;
    }
    const std::size_t h = config_.f() / 2;
    const bool in_union = r1 <= h && r2 == 0;
    const bool in_meet = r1 < h && r2 == 0;
    const bool own = own_->all_vanish(phi.data());
    const bool other = other_->all_vanish(phi.data());
    out.vanishes = own;
    out.in_locus = in_meet;
    if (in_union && r1 == h) {
      if (config_.has_reference_lagrangian())
        out.in_locus = lagrangian_family(phi, config_) == *params_.sign;
      else
        out.in_locus = own;  // component membership not decidable here
    }
    if ((own || other) != in_union)
      out.mismatch = "union of component zero sets differs from the (f/2,0) locus";
    else if ((own && other) != in_meet)
      out.mismatch = "intersection of component zero sets differs from the (f/2-1,0) locus";
    else if (own != out.in_locus)
      out.mismatch = "component zero set differs from its family";
    return out;
  }

  std::size_t generator_count() const noexcept { return generator_count_; }

 private:
  OrbitParams params_;
  const SpaceConfig<F>& config_;
  std::optional<CompiledGenerators<F>> own_, other_;
  std::size_t generator_count_ = 0;
};

struct CutAcc {
  std::uint64_t visited = 0, in_locus = 0, zero_set = 0, mismatches = 0;
  std::optional<Json> witness;
};

template <ExactField F>
void record(CutAcc& acc, const typename CutProbe<F>::Outcome& o,
            const Matrix<F>& phi) {
  ++acc.visited;
  acc.in_locus += o.in_locus;
  acc.zero_set += o.vanishes;
  if (o.mismatch) {
    ++acc.mismatches;
    if (!acc.witness)
      acc.witness = Json{{"reason", o.mismatch},
                         {"matrix", to_json(phi)},
                         {"in_locus", o.in_locus},
                         {"generators_vanish", o.vanishes}};
  }
}

}  // namespace detail

/// zeroset(generators of params) = rank-condition locus. For a signed
/// exceptional class the union and intersection of both component zero
/// sets are checked too. Exhaustive when the field is finite and q^{ef} is
/// within budget, otherwise sampled (orbit points of every class plus
/// uniformly random matrices).
template <ExactField F>
VerificationReport check_equation_cut(const OrbitParams& params,
                                      const SpaceConfig<F>& config,
                                      const VerifyOptions& opt = {}) {
  detail::Stopwatch clock(opt.timing);
  const detail::CutProbe<F> probe(params, config, opt.mutation);
  VerificationReport r;
  r.check = "cut";
  r.config = config_to_json(config);
  r.config["params"] = to_string(params);

  detail::CutAcc total;
  bool exhaustive = false;
  if constexpr (F::is_finite) {
    const auto count = detail::checked_power(config.field().size(), config.e() * config.f());
    if (count && *count <= opt.budget) {
      exhaustive = true;
      const auto shards = detail::sweep(
          config.field(), config.e(), config.f(), opt.threads, detail::CutAcc{},
          [&](detail::CutAcc& acc, const Matrix<F>& phi) {
            detail::record(acc, probe.probe(phi), phi);
          });
      for (const auto& s : shards) {
        total.visited += s.visited;
        total.in_locus += s.in_locus;
        total.zero_set += s.zero_set;
        total.mismatches += s.mismatches;
        if (s.witness && !total.witness) total.witness = s.witness;
      }
    } else {
      r.notes.push_back("budget exceeded; fell back to sampling");
    }
  } else {
    r.notes.push_back("infinite field; sampled");
  }
  if (!exhaustive) {
    detail::set_sampled(r, opt);
    const auto classes = valid_params(config.shape());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!detail::try_representative(classes[c], config)) {
        r.notes.push_back("no representative for " + to_string(classes[c]));
        continue;
      }
      for (std::size_t t = 0; t < opt.samples; ++t) {
        const auto phi = random_orbit_point(classes[c], config,
                                            mix_seed(mix_seed(opt.seed, c), t));
        detail::record(total, probe.probe(phi), phi);
      }
    }
    Rng rng(mix_seed(opt.seed, 0x5eed));
    for (std::size_t t = 0; t < opt.samples; ++t) {
      const auto phi = random_matrix(config.field(), config.e(), config.f(), rng);
      detail::record(total, probe.probe(phi), phi);
    }
  }
  r.tallies = Json{{"generators", probe.generator_count()},
                   {"visited", total.visited},
                   {"in_locus", total.in_locus},
                   {"zero_set", total.zero_set},
                   {"mismatches", total.mismatches}};
  if (total.mismatches > 0) {
    r.status = CheckStatus::fail;
    r.witness = *total.witness;
  }
  clock.stamp(r);
  return r;
}

// ---------------------------------------------------------------------------
// Dimensions

/// tangent_dimension(representative(p)) = ef - codimension(p) for every
/// valid p.
template <ExactField F>
VerificationReport check_dimensions(const SpaceConfig<F>& config,
                                    const VerifyOptions& opt = {}) {
  detail::Stopwatch clock(opt.timing);
  VerificationReport r;
  r.check = "dims";
  r.config = config_to_json(config);
  const auto shape = config.shape();
  std::size_t checked = 0, mismatches = 0;
  Json per_class = Json::object();
  for (const auto& p : valid_params(shape)) {
    const auto rep = detail::try_representative(p, config);
    if (!rep) {
      r.notes.push_back("no representative for " + to_string(p));
      continue;
    }
    ++checked;
    std::size_t codim = codimension(p, shape);
    if (opt.mutation == Mutation::perturb_codimension) codim += 1;
    const std::size_t expected = shape.e * shape.f - codim;
    const std::size_t tangent = tangent_dimension(*rep, config);
    per_class[to_string(p)] = tangent;
    if (tangent != expected) {
      ++mismatches;
      if (r.witness.is_null())
        r.witness = Json{{"params", to_json(p)},
                         {"tangent_dimension", tangent},
                         {"formula_dimension", expected}};
    }
  }
  r.tallies = Json{{"classes", checked}, {"mismatches", mismatches},
                   {"tangent_dimension", per_class}};
  if (mismatches) r.status = CheckStatus::fail;
  clock.stamp(r);
  return r;
}

// ---------------------------------------------------------------------------
// Closure order

/// For every pair (p, q): sampled points of O_p vanish on the generators of
/// q exactly when closure_leq(p, q).
template <ExactField F>
VerificationReport check_closure_order(const SpaceConfig<F>& config,
                                       const VerifyOptions& opt = {}) {
  detail::Stopwatch clock(opt.timing);
  VerificationReport r;
  r.check = "closure";
  r.config = config_to_json(config);
  detail::set_sampled(r, opt);
  const auto shape = config.shape();
  const auto params = valid_params(shape);
  std::vector<CompiledGenerators<F>> gens;
  for (const auto& q : params) gens.emplace_back(orbit_generators(q, config));

  std::size_t pairs = 0, points = 0, mismatches = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!detail::try_representative(params[i], config)) {
      r.notes.push_back("no representative for " + to_string(params[i]));
      continue;
    }
    std::vector<Matrix<F>> sample;
    for (std::size_t t = 0; t < opt.samples; ++t)
      sample.push_back(random_orbit_point(params[i], config,
                                          mix_seed(mix_seed(opt.seed, i), t)));
    points += sample.size();
    for (std::size_t j = 0; j < params.size(); ++j) {
      ++pairs;
      const bool expected = opt.mutation == Mutation::corrupt_closure
                                ? params[i].r1 <= params[j].r1
                                : closure_leq(params[i], params[j], shape);
      for (const auto& phi : sample) {
        const bool vanish = gens[j].all_vanish(phi.data());
        if (vanish == expected) continue;
        ++mismatches;
        if (r.witness.is_null())
          r.witness = Json{{"p", to_json(params[i])},
                           {"q", to_json(params[j])},
                           {"matrix", to_json(phi)},
                           {"generators_vanish", vanish},
                           {"closure_leq", expected}};
      }
    }
  }
  r.tallies = Json{{"pairs", pairs}, {"points", points}, {"mismatches", mismatches}};
  if (mismatches) r.status = CheckStatus::fail;
  clock.stamp(r);
  return r;
}

// ---------------------------------------------------------------------------
// Point counts

/// Heuristic dimension estimate from N_q = |closure(F_q)| for the split
/// form over two primes: round(log(N_q2 / N_q1) / log(q2 / q1)). Uses the
/// two largest primes within budget. WARN (never FAIL) when the estimate is
/// more than 1 away from the dimension.
VerificationReport point_count_dimension_estimate(
    const OrbitParams& params, const SpaceShape& shape,
    const std::vector<std::uint32_t>& primes, const VerifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Everything

/// census (finite fields within budget), cut for every class, dims,
/// closure, and counts over `primes` when the form is the default split one.
template <ExactField F>
std::vector<VerificationReport> run_all(const SpaceConfig<F>& config,
                                        const VerifyOptions& opt,
                                        const std::vector<std::uint32_t>& primes) {
  std::vector<VerificationReport> out;
  auto skipped = [&](const std::string& check, const std::string& why) {
    VerificationReport r;
    r.check = check;
    r.config = config_to_json(config);
    r.status = CheckStatus::warn;
    r.notes.push_back("skipped: " + why);
    out.push_back(std::move(r));
  };
  if constexpr (F::is_finite) {
    try {
      out.push_back(exhaustive_census(config, opt));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      skipped("census", e.what());
    }
  } else {
    skipped("census", "infinite field");
  }
  for (const auto& p : valid_params(config.shape()))
    out.push_back(check_equation_cut(p, config, opt));
  out.push_back(check_dimensions(config, opt));
  out.push_back(check_closure_order(config, opt));
  if (!config.form().is_default_split()) {
    skipped("counts", "point counts use the split form only");
  } else {
    for (const auto& p : valid_params(config.shape())) {
      try {
        out.push_back(point_count_dimension_estimate(p, config.shape(), primes, opt));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        skipped("counts", e.what());
        break;
      }
    }
  }
  return out;
}

}  // namespace isodet
