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

#include "isodet/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "isodet/atlas.hpp"
#include "isodet/verify.hpp"

namespace isodet::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string command;
  std::optional<std::size_t> e, f;
  std::string kind;
  std::string field = "Q";
  std::string gram = "split";
  std::string params;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  std::string format;
  std::string in, out;
  std::size_t samples = 100;
  std::vector<std::uint32_t> primes{3, 5, 7};
  unsigned threads = 0;
  bool timing = false;
  std::string mutate = "none";
};

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

enum Opt : unsigned {
  kShape = 1,    // -e -f --kind --gram
  kParams = 2,   // --params
  kIn = 4,       // --in
  kSamples = 8,  // --samples
  kVerify = 16,  // --budget --threads --timing --mutate
  kPrimes = 32,  // --primes
};

void add_options(CLI::App* app, CliConfig& c, unsigned which) {
  if (which & kShape) {
    app->add_option("-e", c.e, "dim E");
    app->add_option("-f", c.f, "dim F");
    app->add_option("--kind", c.kind, "form kind")
        ->check(CLI::IsMember({"sym", "alt", "symmetric", "alternating"}));
    app->add_option("--gram", c.gram, "split | identity | file:<path>");
  }
  app->add_option("--field", c.field, "Q | p=<prime>[,ext=2]");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--format", c.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", c.out, "write output to this file");
  if (which & kParams) app->add_option("--params", c.params, "r1,r2[,sign]");
  if (which & kIn)
    app->add_option("--in", c.in, "input JSON file")->check(CLI::ExistingFile);
  if (which & kSamples) app->add_option("--samples", c.samples, "sample count");
  if (which & kVerify) {
    app->add_option("--budget", c.budget, "matrix visits per exhaustive check");
    app->add_option("--threads", c.threads, "worker threads (0: all cores)");
    app->add_flag("--timing", c.timing, "record wall time in reports");
    app->add_option("--mutate", c.mutate, "corrupt one ingredient (self-test)")
        ->check(CLI::IsMember({"none", "drop-generator", "perturb-codimension",
                               "drop-class", "corrupt-closure"}));
  }
  if (which & kPrimes)
    app->add_option("--primes", c.primes, "primes for point counts")->delimiter(',');
}

std::string render_matrix(const auto& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m.field().render(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

/// Output sink: echoes the resolved config first, then the payload.
struct Emitter {
  const CliConfig& cfg;
  Json config;
  std::string body;

  bool json() const { return cfg.format == "json"; }

  void text(const std::string& s) { body += s; }

  void object(Json payload) {
    Json j{{"config", config}};
    for (auto& [k, v] : payload.items()) j[k] = std::move(v);
    body += j.dump(2) + "\n";
  }

  std::string finish() const {
    if (json()) return body;
    return "# config " + config.dump() + "\n" + body;
  }
};

template <ExactField F>
BilinearForm<F> resolve_form(const F& field, const CliConfig& c, FormKind kind,
                             std::optional<std::size_t> f) {
  if (c.gram.rfind("file:", 0) == 0) {
    const Json j = read_json_file(c.gram.substr(5));
    BilinearForm<F> form = j.is_object() && j.contains("gram")
                               ? form_from_json(j, field, f)
                               : BilinearForm<F>(kind, matrix_from_json(j, field));
    if (form.kind() != kind)
      fail(ErrorCode::ConfigMismatch, "Gram file holds a " +
                                          std::string(to_string(form.kind())) +
                                          " form");
    if (f && form.dim() != *f)
      fail(ErrorCode::DimensionMismatch, "Gram file has size " +
                                             std::to_string(form.dim()) + ", -f is " +
                                             std::to_string(*f));
    return form;
  }
  if (!f) throw UsageError("-f is required");
  if (c.gram == "split") return BilinearForm<F>::split(field, kind, *f);
  if (c.gram == "identity") {
    if (kind != FormKind::symmetric)
      fail(ErrorCode::InvalidForm, "identity Gram matrix is not alternating");
    return BilinearForm<F>::identity(field, *f);
  }
  throw UsageError("--gram must be split, identity or file:<path>");
}

FormKind require_kind(const CliConfig& c) {
  if (c.kind.empty()) throw UsageError("--kind is required");
  return parse_form_kind(c.kind);
}

std::size_t require_e(const CliConfig& c) {
  if (!c.e) throw UsageError("-e is required");
  return *c.e;
}

OrbitParams require_params(const CliConfig& c) {
  if (c.params.empty()) throw UsageError("--params is required");
  return parse_orbit_params(c.params);
}

void check_given(std::optional<std::size_t> given, std::size_t actual,
                 const char* flag) {
  if (given && *given != actual)
    fail(ErrorCode::DimensionMismatch, std::string(flag) + " is " +
                                           std::to_string(*given) + ", input has " +
                                           std::to_string(actual));
}

template <ExactField F>
Json base_config(const CliConfig& c, const F& field) {
  const auto d = field.descriptor();
  Json j{{"command", c.command},
         {"field", to_json(d)},
         {"field_name", field_name(d)},
         {"seed", c.seed},
         {"format", c.format}};
  return j;
}

template <ExactField F>
void add_space(Json& j, const SpaceConfig<F>& s, const CliConfig& c) {
  j["e"] = s.e();
  j["f"] = s.f();
  j["kind"] = std::string(to_string(s.kind()));
  j["gram"] = c.gram;
  if (c.gram.rfind("file:", 0) == 0) j["gram_rows"] = to_json(s.form().gram())["rows"];
}

template <ExactField F>
int run_atlas(const F& field, const CliConfig& c, Emitter& out) {
  AtlasTable table;
  if (!c.in.empty()) {
    const Json j = read_json_file(c.in);
    table = atlas_from_json(j.contains("atlas") ? j.at("atlas") : j);
    out.config["source"] = c.in;
  } else {
    const auto kind = require_kind(c);
    const SpaceConfig<F> space(require_e(c), resolve_form(field, c, kind, c.f));
    add_space(out.config, space, c);
    table = build_atlas(space);
  }
  if (out.json()) out.object({{"atlas", to_json(table)}});
  else out.text(render_atlas(table));
  return kExitOk;
}

template <ExactField F>
int run_classify(const F& field, const CliConfig& c, Emitter& out) {
  if (c.in.empty()) throw UsageError("--in is required");
  const Json j = read_json_file(c.in);
  const Matrix<F> phi = matrix_from_json(j, field);
  check_given(c.e, phi.rows(), "-e");
  const SpaceConfig<F> space(phi.rows(),
                             resolve_form(field, c, require_kind(c), phi.cols()));
  add_space(out.config, space, c);
  const OrbitParams p = classify(phi, space);
  const std::size_t r = rank(phi);
  const std::size_t iso = isotropic_rank(phi, space.form());
  if (out.json()) {
    out.object({{"params", to_json(p)}, {"rank", r}, {"isotropic_rank", iso}});
  } else {
    out.text(to_string(p) + "\n");
    out.text("rank " + std::to_string(r) + ", psi rank " + std::to_string(iso) + "\n");
  }
  return kExitOk;
}

template <ExactField F>
int run_equations(const F& field, const CliConfig& c, Emitter& out) {
  const SpaceConfig<F> space(require_e(c), resolve_form(field, c, require_kind(c), c.f));
  add_space(out.config, space, c);
  const OrbitParams p = require_params(c);
  out.config["params"] = to_json(p);
  const auto set = orbit_generators(p, space);
  if (out.json()) {
    out.object({{"generators", to_json(set, space.f())}});
    return kExitOk;
  }
  out.text(std::to_string(set.size()) + " generators for " + to_string(p) + "\n");
  for (std::size_t i = 0; i < set.size(); ++i)
    out.text(to_string(set.labels[i]) + ": " + set.polynomials[i].render(space.f()) + "\n");
  return kExitOk;
}

template <ExactField F>
int run_sample(const F& field, const CliConfig& c, Emitter& out) {
  const SpaceConfig<F> space(require_e(c), resolve_form(field, c, require_kind(c), c.f));
  add_space(out.config, space, c);
  const OrbitParams p = require_params(c);
  out.config["params"] = to_json(p);
  out.config["samples"] = c.samples;
  Json points = Json::array();
  for (std::size_t i = 0; i < c.samples; ++i) {
    const Matrix<F> m = random_orbit_point(p, space, mix_seed(c.seed, i));
    if (out.json()) points.push_back(to_json(m)["rows"]);
    else out.text(render_matrix(m) + "\n");
  }
  if (out.json()) out.object({{"params", to_json(p)}, {"points", std::move(points)}});
  return kExitOk;
}

template <ExactField F>
int run_solve(const F& field, const CliConfig& c, Emitter& out) {
  if (c.in.empty()) throw UsageError("--in is required");
  const Json j = read_json_file(c.in);
  const Matrix<F> a = matrix_from_json(json_get<Json>(j, "A"), field);
  const Matrix<F> s = matrix_from_json(json_get<Json>(j, "S"), field);
  check_given(c.e, a.rows(), "-e");
  const SpaceConfig<F> space(a.rows(), resolve_form(field, c, require_kind(c), a.cols()));
  add_space(out.config, space, c);
  const Matrix<F> b = solve_congruence(s, a, space.form());
  const auto& k = space.form().gram();
  const bool zero = (s - (a * k * b.transpose() + b * k * a.transpose())).is_zero();
  if (out.json()) {
    out.object({{"B", to_json(b)["rows"]}, {"residual_zero", zero}});
  } else {
    out.text("B = " + render_matrix(b) + "\n");
    out.text(std::string("residual ") + (zero ? "zero" : "NONZERO") + "\n");
  }
  return zero ? kExitOk : kExitVerifyFailed;
}

template <ExactField F>
int run_verify(const F& field, const CliConfig& c, const std::string& check,
               Emitter& out) {
  const SpaceConfig<F> space(require_e(c), resolve_form(field, c, require_kind(c), c.f));
  add_space(out.config, space, c);
  VerifyOptions opt;
  opt.budget = c.budget;
  opt.samples = c.samples;
  opt.seed = c.seed;
  opt.threads = c.threads;
  opt.timing = c.timing;
  opt.mutation = parse_mutation(c.mutate);
  out.config["budget"] = c.budget;
  out.config["samples"] = c.samples;
  out.config["mutate"] = c.mutate;
  std::optional<OrbitParams> params;
  if (!c.params.empty()) {
    params = parse_orbit_params(c.params);
    out.config["params"] = to_json(*params);
  }
  auto classes = [&] {
    return params ? std::vector<OrbitParams>{*params} : valid_params(space.shape());
  };

  std::vector<VerificationReport> reports;
  if (check == "census") {
    if constexpr (F::is_finite) reports.push_back(exhaustive_census(space, opt));
    else fail(ErrorCode::InfiniteField, "census needs a finite field");
  } else if (check == "cut") {
    for (const auto& p : classes()) reports.push_back(check_equation_cut(p, space, opt));
  } else if (check == "dims") {
    reports.push_back(check_dimensions(space, opt));
  } else if (check == "closure") {
    reports.push_back(check_closure_order(space, opt));
  } else if (check == "counts") {
    out.config["primes"] = c.primes;
    for (const auto& p : classes())
      reports.push_back(point_count_dimension_estimate(p, space.shape(), c.primes, opt));
  } else {
    out.config["primes"] = c.primes;
    reports = run_all(space, opt, c.primes);
  }
  if (out.json()) {
    out.text(Json{{"config", out.config}}.dump() + "\n");
    out.text(to_json_lines(reports));
  } else {
    out.text(summary_table(reports));
  }
  return any_hard_fail(reports) ? kExitVerifyFailed : kExitOk;
}

template <ExactField F>
int run(const F& field, const CliConfig& c, Emitter& out) {
  out.config = base_config(c, field);
  if (c.command == "atlas") return run_atlas(field, c, out);
  if (c.command == "classify") return run_classify(field, c, out);
  if (c.command == "equations") return run_equations(field, c, out);
  if (c.command == "sample") return run_sample(field, c, out);
  if (c.command == "solve-congruence") return run_solve(field, c, out);
  return run_verify(field, c, c.command.substr(7), out);
}

/// An input matrix that names its field decides it when --field is absent.
std::optional<FieldDescriptor> field_from_input(const CliConfig& c) {
  if (c.in.empty() || (c.command != "classify" && c.command != "solve-congruence"))
    return std::nullopt;
  const Json j = read_json_file(c.in);
  const Json* m = &j;
  if (c.command == "solve-congruence" && j.is_object() && j.contains("A")) m = &j.at("A");
  if (m->is_object() && m->contains("field")) return descriptor_from_json(m->at("field"));
  return std::nullopt;
}

}  // namespace

FieldDescriptor parse_field_option(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ") return field_create(FieldKind::rationals);
  std::optional<std::uint64_t> p, ext, d;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start);
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::ParseError, "bad --field value '" + std::string(text) + "'");
    const auto key = part.substr(0, eq);
    const auto value = parse_uint(part.substr(eq + 1), key);
    if (key == "p" && !p) p = value;
    else if (key == "ext" && !ext) ext = value;
    else if (key == "d" && !d) d = value;
    else fail(ErrorCode::ParseError, "bad --field value '" + std::string(text) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!p) fail(ErrorCode::ParseError, "--field needs p=<prime>");
  if (!ext || *ext == 1) {
    if (d) fail(ErrorCode::ParseError, "d= only applies with ext=2");
    return field_create(FieldKind::prime, *p);
  }
  if (*ext != 2) fail(ErrorCode::ParseError, "only ext=2 is supported");
  return field_create(FieldKind::quadratic_extension, *p, d);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Orbits of GL(E) x G(F) on E (x) F, their equations and checks",
               "isodet"};
  app.require_subcommand(1);
  CliConfig c;
  bool field_given = false;

  struct Leaf {
    CLI::App* app;
    std::string name;
  };
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  unsigned which, const std::string& full) {
    auto* sub = parent->add_subcommand(name, help);
    add_options(sub, c, which);
    leaves.push_back({sub, full});
  };
  leaf(&app, "atlas", "table of orbits with dimensions and known properties",
       kShape | kIn, "atlas");
  leaf(&app, "classify", "orbit label of the matrix in --in", kShape | kIn, "classify");
  leaf(&app, "equations", "defining equations of an orbit closure",
       kShape | kParams, "equations");
  leaf(&app, "sample", "random points of an orbit", kShape | kParams | kSamples,
       "sample");
  leaf(&app, "solve-congruence", "solve S = A K B^t + B K A^t for B",
       kShape | kIn, "solve-congruence");
  auto* verify = app.add_subcommand("verify", "verification checks");
  verify->require_subcommand(1);
  const unsigned vopts = kShape | kSamples | kVerify;
  leaf(verify, "census", "exhaustive classification of every matrix", vopts,
       "verify census");
  leaf(verify, "cut", "zero sets of the equations against the rank locus",
       vopts | kParams, "verify cut");
  leaf(verify, "dims", "tangent dimensions against the formula", vopts, "verify dims");
  leaf(verify, "closure", "sampled closure order", vopts, "verify closure");
  leaf(verify, "counts", "point-count dimension estimate", vopts | kParams | kPrimes,
       "verify counts");
  leaf(verify, "all", "every check", vopts | kPrimes, "verify all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  for (const auto& l : leaves)
    if (l.app->parsed()) {
      c.command = l.name;
      field_given = l.app->count("--field") > 0;
    }
  if (c.format.empty()) c.format = c.command.rfind("verify", 0) == 0 ? "json" : "text";

  Emitter emitter{c, Json::object(), {}};
  int code = kExitOk;
  try {
    FieldDescriptor d = field_create(FieldKind::rationals);
    std::optional<FieldDescriptor> from_input;
    if (!field_given) from_input = field_from_input(c);
    if (from_input) {
      d = *from_input;
    } else {
      try {
        d = parse_field_option(c.field);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        throw UsageError(std::string("--field: ") + e.what());
      }
    }
    code = std::visit([&](const auto& field) { return run(field, c, emitter); },
                      make_field(d));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const Error& e) {
    const Json diag{{"error", {{"code", std::string(to_string(e.code()))},
                               {"message", e.what()},
                               {"command", c.command}}}};
    err << diag.dump() << "\n";
    return kExitDomain;
  }

  const std::string text = emitter.finish();
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write '" << c.out << "'\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace isodet::cli
