// Copyright 2026 The gapforge Authors
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

// Command-line front end for gapforge.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapforge/avgop.h"
#include "gapforge/bounds.h"
#include "gapforge/constants.h"
#include "gapforge/error.h"
#include "gapforge/gates.h"
#include "gapforge/serialize.h"
#include "gapforge/weights.h"

namespace {

using gapforge::Json;

enum ExitCode {
  kOk = 0,
  kIo = 1,
  kDomain = 2,
  kResource = 3,
  kConvergence = 4,
};

struct Common {
  int threads = -1;
  std::string format = "json";
  std::string output;
  bool quiet = false;
  std::uint64_t dimension_cap = gapforge::kDefaultDimensionCap;
};

int resolved_threads(const Common& c) {
  if (c.threads >= 0) return c.threads;
  if (const char* env = std::getenv("GAPFORGE_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw gapforge::DomainError("GAPFORGE_THREADS must be an integer");
    }
  }
  return 0;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw gapforge::IoError("cannot write '" + c.output + "'");
  out << text;
  if (!out) throw gapforge::IoError("write to '" + c.output + "' failed");
}

void emit_json(const Common& c, const Json& config, Json result) {
  emit(c, gapforge::make_document(config, std::move(result)).dump(2) + "\n");
}

Json common_config(const Common& c, const std::string& command) {
  Json cfg;
  cfg["command"] = command;
  cfg["threads"] = resolved_threads(c);
  cfg["format"] = c.format;
  cfg["dimension_cap"] = c.dimension_cap;
  return cfg;
}

// NDJSON progress on stderr; the only shared writer, so it holds a lock.
std::function<void(const gapforge::BlockProgress&)> progress_sink(
    const Common& c, const std::string& stage) {
  if (c.quiet) return {};
  auto mu = std::make_shared<std::mutex>();
  return [mu, stage](const gapforge::BlockProgress& p) {
    Json rec;
    rec["event"] = "block";
    rec["stage"] = stage;
    rec["weight"] = gapforge::to_json(p.weight);
    rec["dim"] = p.dim;
    rec["index"] = p.index;
    rec["total"] = p.total;
    rec["norm"] = p.norm;
    std::lock_guard lock(*mu);
    std::cerr << rec.dump() << '\n';
  };
}

void warn(const Common& c, const std::vector<std::string>& warnings) {
  if (c.quiet) return;
  for (const auto& w : warnings) {
    Json rec{{"event", "warning"}, {"message", w}};
    std::cerr << rec.dump() << '\n';
  }
}

gapforge::IrrepMethod parse_method(const std::string& name) {
  if (name == "givens") return gapforge::IrrepMethod::kGivens;
  if (name == "eigen") return gapforge::IrrepMethod::kAlgebraEigen;
  throw gapforge::DomainError("unknown method '" + name + "'");
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

// constants ---------------------------------------------------------------

struct ConstantsArgs {
  int d = 2;
  std::optional<double> eps0;
  bool table = false;
  std::vector<int> dims{2, 3, 4};
};

void run_constants(const Common& c, const ConstantsArgs& a) {
  Json cfg = common_config(c, "constants");
  if (a.table || !a.eps0) {
    std::vector<int> dims = a.table ? a.dims : std::vector<int>{a.d};
    auto rows = gapforge::emit_tables(dims);
    cfg["dims"] = dims;
    if (c.format == "csv") {
      emit(c, gapforge::tables_to_csv(rows, dims.size() > 1));
      return;
    }
    if (c.format == "pretty") {
      std::ostringstream out;
      int current = 0;
      for (const auto& r : rows) {
        if (r.d != current) {
          current = r.d;
          out << "d = " << r.d << "\n"
              << std::setw(10) << "eps0" << std::setw(10) << "t0"
              << std::setw(12) << "alpha" << std::setw(8) << "beta\n";
        }
        out << std::setw(10) << gapforge::format_eps0(r.eps0) << std::setw(10)
            << r.t0 << std::setw(12) << gapforge::format_alpha(r.alpha)
            << std::setw(8) << gapforge::format_beta(r.beta) << "\n";
      }
      emit(c, out.str());
      return;
    }
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(gapforge::to_json(r));
    emit_json(c, cfg, std::move(arr));
    return;
  }
  gapforge::BoundParams p = gapforge::make_bound_params(a.d, *a.eps0);
  warn(c, p.warnings);
  cfg["d"] = a.d;
  cfg["eps0"] = *a.eps0;
  if (c.format == "csv") {
    gapforge::TableRow row{p.d, p.eps0, p.t0, p.alpha, p.beta,
                           p.alpha == 0.0};
    emit(c, gapforge::tables_to_csv({row}, false));
    return;
  }
  if (c.format == "pretty") {
    std::ostringstream out;
    out << "d      " << p.d << "\neps0   " << gapforge::format_eps0(p.eps0)
        << "\nt0     " << p.t0 << "\nalpha  " << gapforge::format_alpha(p.alpha)
        << "\nbeta   " << gapforge::format_beta(p.beta) << "\nc      "
        << fixed(p.c, 6) << "\n";
    emit(c, out.str());
    return;
  }
  emit_json(c, cfg, gapforge::to_json(p));
}

// weights -----------------------------------------------------------------

struct WeightsArgs {
  int d = 2;
  int t = 1;
  bool count_only = false;
  bool nontrivial = false;
};

void run_weights(const Common& c, const WeightsArgs& a) {
  if (a.d < 2 || a.t < 0) throw gapforge::DomainError("need d >= 2, t >= 0");
  auto weights = a.nontrivial ? gapforge::enumerate_nontrivial_weights(a.d, a.t)
                              : gapforge::enumerate_weights(a.d, a.t);
  Json cfg = common_config(c, "weights");
  cfg["d"] = a.d;
  cfg["t"] = a.t;
  cfg["count_only"] = a.count_only;
  cfg["nontrivial"] = a.nontrivial;
  if (a.count_only) {
    if (c.format == "json") {
      emit_json(c, cfg, Json{{"count", weights.size()}});
    } else {
      emit(c, std::to_string(weights.size()) + "\n");
    }
    return;
  }
  if (c.format == "csv" || c.format == "pretty") {
    std::ostringstream out;
    if (c.format == "csv") out << "weight,dim,fs_indicator,one_norm\n";
    for (const auto& w : weights) {
      auto m = gapforge::make_irrep_meta(w);
      if (c.format == "csv") {
        out << '"' << w.str() << "\"," << m.dim << ',' << m.fs_indicator << ','
            << m.one_norm << '\n';
      } else {
        out << std::left << std::setw(24) << w.str() << " dim " << m.dim
            << "  fs " << m.fs_indicator << "  |l|_1 " << m.one_norm << '\n';
      }
    }
    emit(c, out.str());
    return;
  }
  Json arr = Json::array();
  for (const auto& w : weights) {
    arr.push_back(gapforge::to_json(gapforge::make_irrep_meta(w)));
  }
  emit_json(c, cfg, std::move(arr));
}

// gap ---------------------------------------------------------------------

struct GateArgs {
  std::string gates;
  bool repair = false;
  bool auto_symmetrize = false;
  std::string method = "givens";
};

gapforge::GapOptions gap_options(const Common& c, const GateArgs& g,
                                 gapforge::BasisCache& cache,
                                 const std::string& stage) {
  gapforge::GapOptions o;
  o.threads = resolved_threads(c);
  o.auto_symmetrize = g.auto_symmetrize;
  o.method = parse_method(g.method);
  o.cache = &cache;
  o.progress = progress_sink(c, stage);
  return o;
}

void add_gate_config(Json& cfg, const GateArgs& g) {
  cfg["gates"] = g.gates;
  cfg["repair"] = g.repair;
  cfg["auto_symmetrize"] = g.auto_symmetrize;
  cfg["method"] = g.method;
}

struct GapArgs {
  GateArgs gate;
  int t = 1;
  bool per_irrep = false;
};

void run_gap(const Common& c, const GapArgs& a) {
  auto set = gapforge::load_gateset(a.gate.gates, {a.gate.repair});
  gapforge::BasisCache cache(c.dimension_cap);
  auto report = gapforge::gap_at_scale(
      set, a.t, gap_options(c, a.gate, cache, "gap"));
  Json cfg = common_config(c, "gap");
  add_gate_config(cfg, a.gate);
  cfg["t"] = a.t;
  cfg["per_irrep"] = a.per_irrep;
  if (c.format == "csv") {
    std::ostringstream out;
    out << "weight,dim,norm\n";
    for (const auto& b : report.per_weight) {
      out << '"' << b.weight.str() << "\"," << b.dim << ',' << fixed(b.norm, 17)
          << '\n';
    }
    out << "gap,," << fixed(report.gap, 17) << '\n';
    emit(c, out.str());
    return;
  }
  if (c.format == "pretty") {
    std::ostringstream out;
    out << "gap_" << a.t << " = " << fixed(report.gap) << "  (worst "
        << report.worst_weight.str() << ")\n";
    if (a.per_irrep) {
      for (const auto& b : report.per_weight) {
        out << "  " << std::left << std::setw(24) << b.weight.str()
            << std::setw(8) << b.dim << fixed(b.norm) << '\n';
      }
    }
    emit(c, out.str());
    return;
  }
  emit_json(c, cfg, gapforge::to_json(report, a.per_irrep));
}

// gtzero / bound ----------------------------------------------------------

struct BoundArgs {
  GateArgs gate;
  double eps0 = 0.25;
  std::vector<std::int64_t> t;
  std::optional<std::int64_t> t_override;
  bool no_universality = false;
};

gapforge::GtZeroOptions gt0_options(const Common& c, const BoundArgs& a,
                                    gapforge::BasisCache& cache) {
  gapforge::GtZeroOptions o;
  o.t_override = a.t_override;
  o.gap = gap_options(c, a.gate, cache, "gtzero");
  o.check_universality = !a.no_universality;
  return o;
}

void add_bound_config(Json& cfg, const BoundArgs& a) {
  add_gate_config(cfg, a.gate);
  cfg["eps0"] = a.eps0;
  cfg["t_override"] = a.t_override ? Json(*a.t_override) : Json(nullptr);
  cfg["check_universality"] = !a.no_universality;
}

void run_gtzero(const Common& c, const BoundArgs& a) {
  auto set = gapforge::load_gateset(a.gate.gates, {a.gate.repair});
  gapforge::BasisCache cache(c.dimension_cap);
  auto result = gapforge::g_t0(set, a.eps0, gt0_options(c, a, cache));
  warn(c, result.warnings);
  Json cfg = common_config(c, "gtzero");
  add_bound_config(cfg, a);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "m,min_gap,worst_subset\n";
    for (std::size_t m = 0; m < result.table.per_m.size(); ++m) {
      const auto& s = result.table.per_m[m];
      out << m << ',' << fixed(s.min_gap, 17) << ",\"";
      for (std::size_t i = 0; i < s.worst_subset.size(); ++i) {
        out << (i ? " " : "") << s.worst_subset[i];
      }
      out << "\"\n";
    }
    out << "g_t0," << fixed(result.g, 17) << ",\n";
    emit(c, out.str());
    return;
  }
  if (c.format == "pretty") {
    emit(c, "g_t0 = " + fixed(result.g) + " at scale " +
                std::to_string(result.table.t0) +
                (result.below_theorem_scale ? " (below theorem scale)" : "") +
                "\n");
    return;
  }
  emit_json(c, cfg, gapforge::to_json(result));
}

void run_bound(const Common& c, const BoundArgs& a) {
  if (a.t.empty()) throw gapforge::DomainError("bound needs at least one --t");
  auto set = gapforge::load_gateset(a.gate.gates, {a.gate.repair});
  gapforge::BasisCache cache(c.dimension_cap);
  auto gt0 = gapforge::g_t0(set, a.eps0, gt0_options(c, a, cache));
  std::vector<gapforge::BoundReport> reports;
  for (std::int64_t t : a.t) {
    auto r = gapforge::bound_from_g(gt0.params, gt0.g, t,
                                    a.t_override.has_value());
    r.warnings.insert(r.warnings.begin(), gt0.warnings.begin(),
                      gt0.warnings.end());
    r.gt0 = gt0;
    reports.push_back(std::move(r));
  }
  warn(c, reports.front().warnings);
  Json cfg = common_config(c, "bound");
  add_bound_config(cfg, a);
  cfg["t"] = a.t;
  if (c.format == "csv" || a.t.size() > 1) {
    if (c.format == "csv") {
      std::ostringstream out;
      out << "t,alpha,beta,g_t0,log_factor,lower_bound\n";
      for (const auto& r : reports) {
        out << r.t << ',' << fixed(gt0.params.alpha, 17) << ','
            << fixed(gt0.params.beta, 17) << ',' << fixed(gt0.g, 17) << ','
            << fixed(r.log_factor, 17) << ',' << fixed(r.lower_bound, 17)
            << '\n';
      }
      emit(c, out.str());
      return;
    }
  }
  if (c.format == "pretty") {
    std::ostringstream out;
    for (const auto& r : reports) {
      out << "t = " << r.t << "  gap_t >= " << fixed(r.lower_bound) << '\n';
    }
    emit(c, out.str());
    return;
  }
  if (reports.size() == 1) {
    emit_json(c, cfg, gapforge::to_json(reports.front()));
    return;
  }
  Json result = gapforge::to_json(reports.front());
  result.erase("t");
  result.erase("log_factor");
  result.erase("lower_bound");
  Json sweep = Json::array();
  for (const auto& r : reports) {
    sweep.push_back({{"t", r.t},
                     {"log_factor", r.log_factor},
                     {"lower_bound", r.lower_bound}});
  }
  result["sweep"] = std::move(sweep);
  emit_json(c, cfg, std::move(result));
}

// net-length --------------------------------------------------------------

struct NetLengthArgs {
  int d = 2;
  double eps = 0.1;
  double gap = 0.1;
  std::string variant = "thm2";
};

void run_net_length(const Common& c, const NetLengthArgs& a) {
  Json cfg = common_config(c, "net-length");
  cfg["d"] = a.d;
  cfg["eps"] = a.eps;
  cfg["gap"] = a.gap;
  cfg["variant"] = a.variant;
  Json result;
  if (a.variant == "thm2") {
    auto k = gapforge::theorem2_constants(a.d, a.gap);
    result["length"] = gapforge::net_length_thm2(a.d, a.gap, a.eps);
    result["slope"] = k.slope;
    result["B"] = k.offset;
    result["C_V"] = k.volume;
  } else if (a.variant == "scale") {
    auto s = gapforge::net_length_scale_bound(a.d, a.gap, a.eps);
    result["length"] = s.length;
    result["required_t"] = s.required_t;
  } else {
    throw gapforge::DomainError("variant must be thm2 or scale");
  }
  if (c.format == "csv") {
    std::ostringstream out;
    out << "variant,length\n" << a.variant << ','
        << fixed(result["length"].get<double>(), 17) << '\n';
    emit(c, out.str());
    return;
  }
  if (c.format == "pretty") {
    emit(c, "l >= " + fixed(result["length"].get<double>()) + "\n");
    return;
  }
  emit_json(c, cfg, std::move(result));
}

// net-empirical -----------------------------------------------------------

struct NetArgs {
  GateArgs gate;
  int length = 4;
  double eps = 0.5;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::uint64_t word_cap = 10'000'000;
  bool profile = false;
};

void run_net_empirical(const Common& c, const NetArgs& a) {
  auto set = gapforge::load_gateset(a.gate.gates, {a.gate.repair});
  gapforge::NetOptions o;
  o.word_cap = a.word_cap;
  o.threads = resolved_threads(c);
  auto profile = gapforge::empirical_net_profile(set, a.length, a.eps,
                                                 a.samples, a.seed, o);
  warn(c, profile.back().warnings);
  Json cfg = common_config(c, "net-empirical");
  add_gate_config(cfg, a.gate);
  cfg["length"] = a.length;
  cfg["eps"] = a.eps;
  cfg["samples"] = a.samples;
  cfg["seed"] = a.seed;
  cfg["word_cap"] = a.word_cap;
  cfg["profile"] = a.profile;
  if (!a.profile) profile.erase(profile.begin(), profile.end() - 1);
  if (c.format == "csv" || c.format == "pretty") {
    std::ostringstream out;
    if (c.format == "csv") {
      out << "length,words,covered_fraction,max_observed_distance\n";
    }
    for (const auto& e : profile) {
      if (c.format == "csv") {
        out << e.length << ',' << e.words << ',' << fixed(e.covered_fraction, 17)
            << ',' << fixed(e.max_observed_distance, 17) << '\n';
      } else {
        out << "l = " << e.length << "  words " << e.words << "  covered "
            << fixed(e.covered_fraction, 6) << "  max distance "
            << fixed(e.max_observed_distance, 6) << '\n';
      }
    }
    emit(c, out.str());
    return;
  }
  if (a.profile) {
    Json arr = Json::array();
    for (const auto& e : profile) arr.push_back(gapforge::to_json(e));
    emit_json(c, cfg, std::move(arr));
  } else {
    emit_json(c, cfg, gapforge::to_json(profile.back()));
  }
}

// random-gates ------------------------------------------------------------

struct RandomArgs {
  int d = 2;
  int k = 2;
  std::uint64_t seed = 1;
};

void run_random_gates(const Common& c, const RandomArgs& a) {
  auto set = gapforge::haar_random_gateset(a.d, a.k, a.seed);
  emit(c, gapforge::gateset_to_json(set) + "\n");
}

void add_gate_options(CLI::App* sub, GateArgs& g) {
  sub->add_option("--gates", g.gates, "Gate-set JSON file")->required();
  sub->add_flag("--repair", g.repair,
                "Project nearly unitary matrices onto the unitary group");
  sub->add_flag("--auto-symmetrize", g.auto_symmetrize,
                "Use S u S^-1 when S is not symmetric");
  sub->add_option("--method", g.method, "Irrep construction: givens|eigen")
      ->check(CLI::IsMember({"givens", "eigen"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral gaps and their lower bounds for gate sets in PU(d)"};
  app.set_version_flag("--version", std::string(gapforge::version()));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--threads", common.threads,
                 "Worker threads (0 = hardware; default GAPFORGE_THREADS)");
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output,-o", common.output, "Write output to a file");
  app.add_flag("--quiet,-q", common.quiet, "Suppress progress on stderr");
  app.add_option("--dimension-cap", common.dimension_cap,
                 "Largest irrep dimension to build");

  ConstantsArgs constants;
  auto* c_cmd = app.add_subcommand("constants", "Bound constants and tables");
  c_cmd->add_option("--d", constants.d, "Dimension");
  c_cmd->add_option("--eps0", constants.eps0, "Construction parameter");
  c_cmd->add_flag("--table", constants.table, "Emit the full tables");
  c_cmd->add_option("--dims", constants.dims, "Dimensions for --table")
      ->delimiter(',');

  WeightsArgs weights;
  auto* w_cmd = app.add_subcommand("weights", "Enumerate the weight set");
  w_cmd->add_option("--d", weights.d, "Dimension")->required();
  w_cmd->add_option("--t", weights.t, "Scale")->required();
  w_cmd->add_flag("--count-only", weights.count_only, "Print the count only");
  w_cmd->add_flag("--nontrivial", weights.nontrivial, "Omit the trivial weight");

  GapArgs gap;
  auto* g_cmd = app.add_subcommand("gap", "Spectral gap at scale t");
  add_gate_options(g_cmd, gap.gate);
  g_cmd->add_option("--t", gap.t, "Scale")->required();
  g_cmd->add_flag("--per-irrep", gap.per_irrep, "Report every block norm");

  BoundArgs gtzero;
  auto* z_cmd = app.add_subcommand("gtzero", "Subset gaps and g_t0");
  add_gate_options(z_cmd, gtzero.gate);
  z_cmd->add_option("--eps0", gtzero.eps0, "Construction parameter");
  z_cmd->add_option("--t-override", gtzero.t_override,
                    "Compute gaps at this scale instead of t0");
  z_cmd->add_flag("--no-universality", gtzero.no_universality,
                  "Skip the universality heuristic");

  BoundArgs bound;
  auto* b_cmd = app.add_subcommand("bound", "Lower bound on gap_t");
  add_gate_options(b_cmd, bound.gate);
  b_cmd->add_option("--eps0", bound.eps0, "Construction parameter");
  b_cmd->add_option("--t", bound.t, "Scale(s) for the bound")->required();
  b_cmd->add_option("--t-override", bound.t_override,
                    "Compute gaps at this scale instead of t0");
  b_cmd->add_flag("--no-universality", bound.no_universality,
                  "Skip the universality heuristic");

  NetLengthArgs net_length;
  auto* l_cmd = app.add_subcommand("net-length", "Word length for an eps-net");
  l_cmd->add_option("--d", net_length.d, "Dimension");
  l_cmd->add_option("--eps", net_length.eps, "Net radius")->required();
  l_cmd->add_option("--gap,--gap-t", net_length.gap, "Spectral gap")
      ->required();
  l_cmd->add_option("--variant", net_length.variant, "thm2|scale")
      ->check(CLI::IsMember({"thm2", "scale"}));

  NetArgs net;
  auto* n_cmd = app.add_subcommand("net-empirical", "Sampled eps-net coverage");
  add_gate_options(n_cmd, net.gate);
  n_cmd->add_option("--length", net.length, "Maximum word length");
  n_cmd->add_option("--eps", net.eps, "Net radius");
  n_cmd->add_option("--samples", net.samples, "Haar samples");
  n_cmd->add_option("--seed", net.seed, "Sampling seed");
  n_cmd->add_option("--word-cap", net.word_cap, "Largest word count");
  n_cmd->add_flag("--profile", net.profile, "Report every length up to --length");

  RandomArgs random;
  auto* r_cmd = app.add_subcommand("random-gates", "Haar-random gate set");
  r_cmd->add_option("--d", random.d, "Dimension");
  r_cmd->add_option("--k", random.k, "Generator pairs");
  r_cmd->add_option("--seed", random.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (*c_cmd) run_constants(common, constants);
    if (*w_cmd) run_weights(common, weights);
    if (*g_cmd) run_gap(common, gap);
    if (*z_cmd) run_gtzero(common, gtzero);
    if (*b_cmd) run_bound(common, bound);
    if (*l_cmd) run_net_length(common, net_length);
    if (*n_cmd) run_net_empirical(common, net);
    if (*r_cmd) run_random_gates(common, random);
  } catch (const gapforge::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const gapforge::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const gapforge::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const gapforge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
