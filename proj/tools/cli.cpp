// Copyright 2026 The martight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "martight/envelope.hpp"
#include "martight/errors.hpp"
#include "martight/oracles.hpp"
#include "martight/tight_bound.hpp"

#ifndef MARTIGHT_VERSION
#define MARTIGHT_VERSION "0.0.0"
#endif

namespace martight::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kExactLimitVar = "MARTIGHT_EXACT_LIMIT";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const char* flag) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw UsageError(std::string(flag) + ": expected an integer, got '" + text + "'");
  }
  return value;
}

// Integer threshold or "inf"; empty optional means infinite.
std::optional<std::int64_t> parse_threshold(const std::string& text, const char* flag) {
  if (text == "inf" || text == "+inf") return std::nullopt;
  const std::int64_t v = parse_int(text, flag);
  if (v < 0) throw UsageError(std::string(flag) + " must be non-negative");
  return v;
}

ExactLimit exact_limit_from_env() {
  ExactLimit limit;
  if (const char* raw = std::getenv(kExactLimitVar); raw != nullptr && *raw != '\0') {
    const std::int64_t v = parse_int(raw, kExactLimitVar);
    if (v < 0) throw UsageError(std::string(kExactLimitVar) + " must be non-negative");
    limit.max_horizon = v;
  }
  return limit;
}

Json dyadic_json(const Dyadic& d) {
  return Json{{"dyadic", d.to_string()}, {"decimal", d.to_decimal()}, {"value", d.to_double()}};
}

Json threshold_json(const std::optional<std::int64_t>& t) {
  return t ? Json(*t) : Json("inf");
}

Json meta_json(const char* mode) {
  return Json{{"mode", mode}, {"version", MARTIGHT_VERSION}};
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- bound

struct BoundFlags {
  std::string x;
  std::string y;
  std::int64_t m = 0;
  double c = 1.0;
  std::string format = "json";
  bool exact = true;
};

int cmd_bound(const BoundFlags& f, std::ostream& out) {
  std::optional<std::int64_t> x = parse_threshold(f.x, "--x");
  std::optional<std::int64_t> y = parse_threshold(f.y, "--y");
  if (!x && !y) throw UsageError("--x and --y cannot both be inf");
  if (f.m < 0) throw UsageError("--m must be non-negative");
  if (!(f.c > 0.0) || !std::isfinite(f.c)) throw UsageError("--c must be positive");

  // G(inf, y, m) = G(y, inf, m): a missing upper barrier mirrors to one-sided.
  BoundQuery q;
  q.x = x ? *x : *y;
  q.y = x ? y : std::nullopt;
  q.m = f.m;
  q.c = f.c;
  const ExactLimit limit = exact_limit_from_env();
  const BoundReport r =
      bound_report(q, f.exact ? EvalMode::kExact : EvalMode::kFloat, limit);
  const char* mode = r.exact ? "exact" : "float";

  if (f.format == "csv") {
    out << "x,y,m,c,mode,tight,tight_dyadic,corollary,corollary_dyadic,corollary_clamped,"
           "azuma_one,azuma_two,azuma_two_clamped\n";
    out << (x ? std::to_string(*x) : "inf") << ',' << (y ? std::to_string(*y) : "inf") << ','
        << f.m << ',' << format_csv_number(f.c) << ',' << mode << ','
        << format_csv_number(r.tight_float) << ',' << (r.tight ? r.tight->to_string() : "")
        << ',' << format_csv_number(r.corollary_float) << ','
        << (r.corollary ? r.corollary->to_string() : "") << ','
        << format_csv_number(r.corollary_clamped) << ',' << format_csv_number(r.azuma_one)
        << ',' << format_csv_number(r.azuma_two) << ','
        << format_csv_number(r.azuma_two_clamped) << '\n';
    return kOk;
  }

  Json results;
  results["tight"] = r.tight ? dyadic_json(*r.tight) : Json(r.tight_float);
  results["corollary"] = r.corollary ? dyadic_json(*r.corollary) : Json(r.corollary_float);
  results["corollary_clamped"] = r.corollary_clamped;
  results["azuma_one"] = r.azuma_one;
  results["azuma_two"] = r.azuma_two;
  results["azuma_two_clamped"] = r.azuma_two_clamped;
  emit_json(out, Json{{"command", "bound"},
                      {"query",
                       {{"x", threshold_json(x)},
                        {"y", threshold_json(y)},
                        {"m", f.m},
                        {"c", f.c},
                        {"exact", f.exact}}},
                      {"results", results},
                      {"meta", meta_json(mode)}});
  return kOk;
}

// ---------------------------------------------------------------- oracle

struct OracleFlags {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t m = 0;
  std::string method = "all";
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  if (f.x < 0 || f.y < 0 || f.m < 0) throw UsageError("--x, --y and --m must be non-negative");
  const bool all = f.method == "all";
  const ExactLimit limit = exact_limit_from_env();

  Json results = Json::object();
  std::optional<Dyadic> reference;
  bool agree = true;
  auto record = [&](const char* name, const Dyadic& value) {
    results[name] = dyadic_json(value);
    if (!reference) {
      reference = value;
    } else if (!(*reference == value)) {
      agree = false;
    }
  };
  if (all || f.method == "closed") record("closed", g_closed(f.x, f.y, f.m, limit));
  if (all || f.method == "recurrence") record("recurrence", g_recurrence(f.x, f.y, f.m));
  if (all || f.method == "walk") record("walk", hitting_mass(walk_distribution(f.x, f.y, f.m)));
  results["agree"] = agree;

  emit_json(out, Json{{"command", "oracle"},
                      {"query", {{"x", f.x}, {"y", f.y}, {"m", f.m}, {"method", f.method}}},
                      {"results", results},
                      {"meta", meta_json("exact")}});
  return agree ? kOk : kOracleDisagreement;
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  std::string x;
  std::string y;
  std::int64_t m = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  std::optional<std::int64_t> x = parse_threshold(f.x, "--x");
  std::optional<std::int64_t> y = parse_threshold(f.y, "--y");
  if (!x) throw UsageError("--x must be finite");
  if (f.m < 0) throw UsageError("--m must be non-negative");
  if (f.trials < 1) throw UsageError("--trials must be at least 1");

  SimConfig cfg{*x, y, f.m, f.trials, f.seed};
  const SimResult sim = simulate(cfg, f.workers);

  const ExactLimit limit = exact_limit_from_env();
  Json exact = nullptr;
  if (f.m <= limit.max_horizon) {
    exact = dyadic_json(y ? g_closed(*x, *y, f.m, limit) : g_one_sided(*x, f.m, limit));
  }
  const double bound = g_value(*x, y, f.m, EvalMode::kAuto, limit);
  Json z_score = nullptr;
  const double diff = sim.frequency - bound;
  if (sim.std_error > 0.0) {
    z_score = diff / sim.std_error;
  } else if (diff == 0.0) {
    z_score = 0.0;
  }

  emit_json(out, Json{{"command", "simulate"},
                      {"query",
                       {{"x", *x},
                        {"y", threshold_json(y)},
                        {"m", f.m},
                        {"trials", f.trials},
                        {"seed", f.seed}}},
                      {"results",
                       {{"hits", sim.hits},
                        {"trials", sim.trials},
                        {"frequency", sim.frequency},
                        {"stderr", sim.std_error},
                        {"exact", exact},
                        {"bound", bound},
                        {"z_score", z_score}}},
                      {"meta",
                       {{"mode", exact.is_null() ? "float" : "exact"},
                        {"version", MARTIGHT_VERSION},
                        {"seed", f.seed}}}});
  return kOk;
}

// ---------------------------------------------------------------- envelope

struct EnvelopeFlags {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double t = 0.0;
};

int cmd_envelope(const EnvelopeFlags& f, std::ostream& out) {
  if (f.n < 0 || f.m < 0) throw UsageError("--n and --m must be non-negative");
  if (!std::isfinite(f.t)) throw UsageError("--t must be finite");
  const ExactLimit limit = exact_limit_from_env();
  Json results{{"value", h_envelope({f.n, f.m, f.t}, limit)}};
  const bool at_integer = std::floor(f.t) == f.t;
  if (at_integer && f.m <= limit.max_horizon) {
    results["exact"] = dyadic_json(h_envelope_exact(f.n, f.m, Dyadic::from_double(f.t), limit));
  }
  emit_json(out, Json{{"command", "envelope"},
                      {"query", {{"n", f.n}, {"m", f.m}, {"t", f.t}}},
                      {"results", results},
                      {"meta", meta_json(results.contains("exact") ? "exact" : "float")}});
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  double r_min = 0.05;
  double r_max = 3.0;
  double step = 0.05;
  std::string out_path;
  bool clamp = true;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out) {
  if (!(f.r_min > 0.0) || !(f.r_max > f.r_min) || !(f.step > 0.0) || !std::isfinite(f.r_max) ||
      !std::isfinite(f.step)) {
    throw UsageError("sweep needs 0 < --r-min < --r-max and --step > 0");
  }
  const std::string csv = render_sweep_csv(asymptotic_sweep(f.r_min, f.r_max, f.step), f.clamp);
  if (f.out_path.empty()) {
    out << csv;
    return kOk;
  }
  std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + f.out_path + "' for writing");
  file << csv;
  file.close();
  if (!file) throw IoError("failed writing '" + f.out_path + "'");
  return kOk;
}

}  // namespace

std::string format_csv_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

std::string render_sweep_csv(const std::vector<AsymptoticSample>& rows, bool clamp) {
  std::string csv = "r,azuma_one,azuma_two,tight_one,tight_two,corollary_two,rw_one,rw_two\n";
  auto cell = [&](double v) { return format_csv_number(clamp ? std::clamp(v, 0.0, 1.0) : v); };
  for (const AsymptoticSample& s : rows) {
    csv += format_csv_number(s.r);
    for (double v : {s.azuma_one, s.azuma_two, s.tight_one, s.tight_two, s.corollary_two,
                     s.rw_one, s.rw_two}) {
      csv += ',';
      csv += cell(v);
    }
    csv += '\n';
  }
  return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight tail bounds for martingales with uniformly bounded jumps", "martight"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MARTIGHT_VERSION);

  BoundFlags bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Tight, union and Azuma bounds for one query");
  bound_cmd->add_option("--x", bound.x, "Upper threshold in units of c (integer or inf)")
      ->required();
  bound_cmd->add_option("--y", bound.y, "Lower threshold in units of c (integer or inf)")
      ->required();
  bound_cmd->add_option("--m", bound.m, "Horizon (steps)")->required();
  bound_cmd->add_option("--c", bound.c, "Jump bound")->capture_default_str();
  bound_cmd->add_option("--format", bound.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  bound_cmd->add_option("--exact", bound.exact, "Exact dyadic evaluation (true|false)")
      ->capture_default_str();

  OracleFlags oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Cross-check G with independent oracles");
  oracle_cmd->add_option("--x", oracle.x)->required();
  oracle_cmd->add_option("--y", oracle.y)->required();
  oracle_cmd->add_option("--m", oracle.m)->required();
  oracle_cmd->add_option("--method", oracle.method)
      ->check(CLI::IsMember({"recurrence", "walk", "closed", "all"}))
      ->capture_default_str();

  SimulateFlags sim;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run of the extremal stopped walk");
  sim_cmd->add_option("--x", sim.x)->required();
  sim_cmd->add_option("--y", sim.y)->required();
  sim_cmd->add_option("--m", sim.m)->required();
  sim_cmd->add_option("--trials", sim.trials)->required();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_option("--workers", sim.workers, "Worker threads, 0 = all cores")
      ->capture_default_str();

  EnvelopeFlags env;
  CLI::App* env_cmd = app.add_subcommand("envelope", "Piecewise-linear envelope H_{n,m}(t)");
  env_cmd->add_option("--n", env.n)->required();
  env_cmd->add_option("--m", env.m)->required();
  env_cmd->add_option("--t", env.t)->required();

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Limit curves over a grid of r, as CSV");
  sweep_cmd->add_option("--r-min", sweep.r_min)->capture_default_str();
  sweep_cmd->add_option("--r-max", sweep.r_max)->capture_default_str();
  sweep_cmd->add_option("--step", sweep.step)->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_path, "Output file (default stdout)");
  sweep_cmd->add_option("--clamp", sweep.clamp, "Clamp values to [0, 1] (true|false)")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*env_cmd) return cmd_envelope(env, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace martight::cli
