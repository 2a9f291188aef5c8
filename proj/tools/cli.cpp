// Copyright 2026 The c4toric Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "c4toric/circuits.hpp"
#include "c4toric/codes.hpp"
#include "c4toric/errors.hpp"
#include "c4toric/matching.hpp"
#include "json.hpp"

namespace c4toric::cli {

namespace {

using nlohmann::json;

template <typename T>
T get_as(const json& doc, const std::string& key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidParameter("config key '" + key + "': " + e.what());
  }
}

double get_probability(const json& doc, const std::string& key) {
  const auto v = get_as<double>(doc, key);
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidParameter("config key '" + key + "': probability must lie in [0, 1]");
  return v;
}

}  // namespace

ConfigFile parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidParameter(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidParameter("config must be a JSON object");
  static const std::set<std::string> known = {
      "family", "scenario",   "schedule",    "l_values", "p_values", "p_linspace", "trials",    "q",
      "octagon_cnot_multiplier", "time_weight", "rounds", "seed",     "threads",  "out_dir",    "verbosity"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw InvalidParameter("unknown config key '" + key + "'");
  }

  ConfigFile cfg;
  ExperimentConfig& e = cfg.experiment;
  auto wrap = [](const std::string& key, auto&& fn) {
    try {
      fn();
    } catch (const InvalidParameter& ex) {
      const std::string what = ex.what();
      if (what.find("'" + key + "'") != std::string::npos) throw;
      throw InvalidParameter("config key '" + key + "': " + what);
    }
  };
  if (!doc.contains("family")) throw InvalidParameter("config key 'family' is required");
  wrap("family", [&] { e.family = parse_family(get_as<std::string>(doc, "family")); });
  if (doc.contains("scenario")) wrap("scenario", [&] { e.scenario = parse_scenario(get_as<std::string>(doc, "scenario")); });
  e.schedule = e.family == CodeFamily::Toric ? ScheduleKind::Toric4 : ScheduleKind::C4Four;
  if (doc.contains("schedule")) {
    wrap("schedule", [&] { e.schedule = parse_schedule_kind(get_as<std::string>(doc, "schedule")); });
  }
  if (!doc.contains("l_values")) throw InvalidParameter("config key 'l_values' is required");
  e.l_values = get_as<std::vector<int>>(doc, "l_values");
  if (doc.contains("p_values") == doc.contains("p_linspace")) {
    throw InvalidParameter("config key 'p_values': give exactly one of 'p_values' and 'p_linspace'");
  }
  if (doc.contains("p_values")) {
    e.p_values = get_as<std::vector<double>>(doc, "p_values");
    for (double p : e.p_values) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("config key 'p_values': probabilities must lie in [0, 1]");
    }
  } else {
    const auto spec = get_as<std::vector<double>>(doc, "p_linspace");
    if (spec.size() != 3 || spec[2] < 2 || spec[2] != static_cast<int>(spec[2])) {
      throw InvalidParameter("config key 'p_linspace': expected [start, stop, count >= 2]");
    }
    const int count = static_cast<int>(spec[2]);
    for (int i = 0; i < count; ++i) e.p_values.push_back(spec[0] + (spec[1] - spec[0]) * i / (count - 1));
    for (double p : e.p_values) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("config key 'p_linspace': probabilities must lie in [0, 1]");
    }
  }
  if (doc.contains("trials")) e.trials = get_as<std::uint64_t>(doc, "trials");
  if (doc.contains("q")) e.q = get_probability(doc, "q");
  if (doc.contains("octagon_cnot_multiplier")) e.octagon_cnot_multiplier = get_as<double>(doc, "octagon_cnot_multiplier");
  if (doc.contains("time_weight")) e.time_weight = get_as<int>(doc, "time_weight");
  if (doc.contains("rounds")) e.rounds = get_as<int>(doc, "rounds");
  if (doc.contains("seed")) e.master_seed = get_as<std::uint64_t>(doc, "seed");
  if (doc.contains("threads")) e.threads = get_as<int>(doc, "threads");
  if (doc.contains("out_dir")) cfg.out_dir = get_as<std::string>(doc, "out_dir");
  if (doc.contains("verbosity")) cfg.verbosity = get_as<int>(doc, "verbosity");
  // ExperimentConfig::validate names its fields, which match the keys.
  e.validate();
  return cfg;
}

int cmd_run(const std::string& config_path, const RunOverrides& overrides, std::ostream& out, std::ostream& err) {
  ConfigFile cfg;
  try {
    std::ifstream in(config_path);
    if (!in) throw InvalidParameter("cannot read config file '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config(buf.str());
    if (overrides.seed) cfg.experiment.master_seed = *overrides.seed;
    if (overrides.threads) cfg.experiment.threads = *overrides.threads;
    if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
    cfg.experiment.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const ExperimentConfig& e = cfg.experiment;
  const SweepResult result = run_sweep(e, [&](const PointResult& pt) {
    if (cfg.verbosity > 0) {
      out << to_string(e.family) << " l=" << pt.l << " d=" << pt.d << " p=" << pt.p << " failures=" << pt.failures
          << "/" << pt.trials << " rate=" << pt.rate << " ci=[" << pt.ci_low << ", " << pt.ci_high << "]\n";
      out.flush();
    }
  });

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  const auto dir = std::filesystem::path(cfg.out_dir);
  std::ofstream csv(dir / "results.csv", std::ios::binary);
  std::ofstream thr(dir / "threshold.json", std::ios::binary);
  std::ofstream flips(dir / "logical_flips.csv", std::ios::binary);
  if (!csv || !thr || !flips) {
    err << "error: cannot write to out_dir '" << cfg.out_dir << "'\n";
    return 1;
  }
  csv << results_csv(e, result.points);
  thr << threshold_json(result.threshold);
  flips << flips_csv(result.points);
  if (result.threshold.crossed) {
    out << "threshold p_c=" << result.threshold.p_c << " ci=[" << result.threshold.ci_low << ", "
        << result.threshold.ci_high << "]\n";
  } else {
    out << "threshold: " << result.threshold.notes << "\n";
  }
  return 0;
}

int cmd_verify(std::string_view family_text, int l, std::ostream& out, std::ostream& err) {
  CodeFamily family;
  CodeSpec spec;
  try {
    family = parse_family(family_text);
    if (l < 2) throw InvalidParameter("l must be >= 2 (got " + std::to_string(l) + ")");
    spec = build_code(family, l);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  bool ok = true;
  auto report = [&](const std::string& suite, const std::vector<std::string>& failures) {
    out << (failures.empty() ? "PASS " : "FAIL ") << suite << "\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    ok = ok && failures.empty();
  };

  report("code construction", verify_code(spec).violations);

  {
    std::vector<std::string> failures;
    for (int side = 0; side < 2; ++side) {
      const Sublattice& sub = spec.sublattices[side];
      for (std::size_t a = 0; a < sub.num_nodes() && failures.size() < 5; ++a) {
        for (std::size_t b = 0; b < sub.num_nodes(); ++b) {
          const auto na = make_defect_node(spec, sub.check_ids[a]);
          const auto nb = make_defect_node(spec, sub.check_ids[b]);
          const int closed = spatial_distance(spec, na, nb);
          const int bfs = spatial_distance_bfs(spec, na, nb);
          if (closed != bfs) {
            failures.push_back("checks " + std::to_string(na.check_id) + ", " + std::to_string(nb.check_id) +
                               ": closed form " + std::to_string(closed) + " != shortest path " + std::to_string(bfs));
            break;
          }
        }
      }
    }
    report("metric oracle", failures);
  }

  {
    std::vector<std::string> failures;
    std::mt19937_64 rng(7);
    const auto& checks = spec.sublattices[0].check_ids;
    for (int inst = 0; inst < 100 && failures.empty(); ++inst) {
      const std::size_t m = 2 * (1 + rng() % 5);
      std::vector<DefectNode> nodes;
      for (std::size_t k = 0; k < m; ++k) {
        nodes.push_back(make_defect_node(spec, checks[rng() % checks.size()], static_cast<int>(rng() % 3)));
      }
      const auto problem = MatchingProblem::from_nodes(spec, nodes);
      const auto fast = pairing_weight(problem, mwpm(problem));
      const auto brute = pairing_weight(problem, mwpm_bruteforce(problem));
      if (fast != brute) {
        failures.push_back("instance " + std::to_string(inst) + ": blossom weight " + std::to_string(fast) +
                           " != brute force " + std::to_string(brute));
      }
    }
    report("matching oracle", failures);
  }

  const std::vector<ScheduleKind> kinds = family == CodeFamily::Toric
                                              ? std::vector<ScheduleKind>{ScheduleKind::Toric4}
                                              : std::vector<ScheduleKind>{ScheduleKind::C4Eight, ScheduleKind::C4Four};
  for (ScheduleKind kind : kinds) {
    const std::string suite = "schedule " + std::string(to_string(kind));
    try {
      ValidationOptions options;
      options.sweep_rounds = 2;
      const Schedule schedule = build_schedule(spec, kind);
      const ValidationReport rep = validate_schedule(spec, schedule, options);
      report(suite, rep.failures);
      out << "  single faults swept: " << rep.faults_swept << ", decoded to a logical error: "
          << rep.sweep_logical_failures << "\n";
    } catch (const ConstructionError& e) {
      report(suite, {e.what()});
    }
  }
  return ok ? 0 : 1;
}

int cmd_distance(std::string_view family_text, int l, std::size_t w_max, std::ostream& out, std::ostream& err) {
  try {
    const CodeFamily family = parse_family(family_text);
    if (l < 2) throw InvalidParameter("l must be >= 2 (got " + std::to_string(l) + ")");
    const CodeSpec spec = build_code(family, l);
    const auto w = min_logical_weight(spec, w_max);
    if (w) {
      out << *w << "\n";
    } else {
      out << "not found <= " << w_max << "\n";
    }
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "refusing: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"c4toric: toric and C4-concatenated toric code threshold experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  RunOverrides overrides;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out_dir;
  auto* seed_opt = app.add_option("--seed", seed, "Override the master seed");
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* out_opt = app.add_option("--out-dir", out_dir, "Directory for results.csv and threshold.json");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a campaign from a JSON config");
  run->add_option("config", config_path, "Config file")->required();

  std::string family;
  int l = 0;
  std::size_t w_max = 0;
  auto* verify = app.add_subcommand("verify", "Check code, metric, matcher and schedules");
  verify->add_option("family", family, "Toric or C4Toric")->required();
  verify->add_option("l", l, "Lattice size")->required();
  auto* distance = app.add_subcommand("distance", "Brute-force minimum logical weight");
  distance->add_option("family", family, "Toric or C4Toric")->required();
  distance->add_option("l", l, "Lattice size")->required();
  distance->add_option("w_max", w_max, "Largest weight to search")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (*seed_opt) overrides.seed = seed;
  if (*threads_opt) overrides.threads = threads;
  if (*out_opt) overrides.out_dir = out_dir;

  if (*run) return cmd_run(config_path, overrides, out, err);
  if (*verify) return cmd_verify(family, l, out, err);
  return cmd_distance(family, l, w_max, out, err);
}

}  // namespace c4toric::cli
