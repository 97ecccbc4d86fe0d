#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "airson/catalog.hpp"
#include "airson/error.hpp"
#include "airson/io.hpp"
#include "airson/son_sim.hpp"
#include "airson/solvers.hpp"

using namespace airson;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kConfig = 2, kIo = 3, kBudget = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Io:
      return kIo;
    case ErrorKind::BudgetExceeded:
      return kBudget;
    default:
      return kConfig;
  }
}

// Options shared by every subcommand. Unset optionals fall back to the
// config file, then to built-in defaults.
struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  bool no_timing = false;
};

struct GenFlags {
  std::optional<int> ues, laps;
  std::optional<double> side, hotspot_fraction, hotspot_radius;
  std::optional<double> lap_altitude, lap_tx, lap_exponent;
  std::optional<int> lap_capacity;
  std::optional<std::string> platform;
};

struct SolverFlags {
  std::optional<std::string> kind;
  std::optional<double> spacing;
  std::optional<std::uint64_t> budget;
  std::optional<int> iters, population;
};

struct SimFlags {
  std::optional<std::string> events, policy, catalog;
  std::optional<double> horizon;
  std::string format = "both";
};

Json load_config(const Common& c) {
  if (c.config.empty()) return Json::object();
  Json j = read_json_file(c.config);
  if (!j.is_object()) throw Error(ErrorKind::Schema, c.config + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "seed" && key != "scenario" && key != "solver" && key != "sim" && key != "output" &&
        key != "schema_version") {
      throw Error(ErrorKind::Schema, c.config + ": unknown key '" + key + "'");
    }
  }
  return j;
}

std::uint64_t resolve_seed(const Common& c, const Json& cfg) {
  std::uint64_t seed;
  if (c.seed) {
    seed = *c.seed;
  } else if (cfg.contains("seed")) {
    if (!cfg["seed"].is_number_unsigned()) throw Error(ErrorKind::Schema, "seed: expected an unsigned integer");
    seed = cfg["seed"].get<std::uint64_t>();
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::cout << "seed: " << seed << '\n';
  return seed;
}

fs::path output_dir(const Common& c, const Json& cfg, bool dir_flag_given) {
  fs::path dir = c.out;
  if (!dir_flag_given && cfg.contains("output")) dir = cfg["output"].get<std::string>();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

ScenarioGenConfig gen_config(const GenFlags& f, const Json& cfg) {
  ScenarioGenConfig g = cfg.contains("scenario") ? gen_config_from_json(cfg["scenario"]) : ScenarioGenConfig{};
  if (f.ues) g.num_ues = *f.ues;
  if (f.side) g.region.side = *f.side;
  if (f.hotspot_fraction) g.hotspot.fraction = *f.hotspot_fraction;
  if (f.hotspot_radius) g.hotspot.radius_m = *f.hotspot_radius;
  if (f.laps) {
    const LapSpec tmpl = g.fleet.empty() ? LapSpec{} : g.fleet.front();
    g.fleet.assign(static_cast<std::size_t>(std::max(*f.laps, 0)), tmpl);
  }
  for (LapSpec& lap : g.fleet) {
    if (f.lap_altitude) lap.altitude_m = *f.lap_altitude;
    if (f.lap_tx) lap.tx_power_dbm = *f.lap_tx;
    if (f.lap_exponent) lap.pathloss_exponent = *f.lap_exponent;
    if (f.lap_capacity) lap.capacity = *f.lap_capacity;
    if (f.platform) {
      lap.platform_name = *f.platform;
      lap.endurance_hours.reset();
    }
  }
  g.validate();
  return g;
}

SolverConfig solver_config(const SolverFlags& f, const Json& cfg) {
  SolverConfig s = cfg.contains("solver") ? solver_config_from_json(cfg["solver"]) : SolverConfig{ExhaustiveConfig{}};
  if (f.kind && *f.kind != solver_name(s)) s = solver_config_from_json(Json{{"kind", *f.kind}});
  std::visit(
      [&](auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExhaustiveConfig>) {
          if (f.spacing) c.spacing = *f.spacing;
          if (f.budget) c.budget = *f.budget;
        } else if constexpr (std::is_same_v<T, GaConfig>) {
          if (f.iters) c.max_iters = *f.iters;
          if (f.population) c.population = *f.population;
        } else if constexpr (std::is_same_v<T, PsoConfig>) {
          if (f.iters) c.max_iters = *f.iters;
          if (f.population) c.particles = *f.population;
        } else if constexpr (std::is_same_v<T, AcoConfig>) {
          if (f.iters) c.max_iters = *f.iters;
          if (f.population) c.ants = *f.population;
          if (f.spacing) c.spacing = *f.spacing;
        } else {
          if (f.population) c.samples = *f.population;
        }
      },
      s);
  validate(s);
  return s;
}

EventSource parse_events(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&](const char* what) {
    try {
      std::size_t used = 0;
      const double v = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidConfig, std::string("--events ") + head + ": expected " + what);
    }
  };
  if (head == "none") return ScriptedEvents{};
  if (head == "scripted") return ScriptedEvents{load_events(arg)};
  if (head == "endurance") return EnduranceEvents{};
  if (head == "exponential") return ExponentialEvents{number("a mean time to failure in hours")};
  if (head == "loaded") return LoadedLapLoss{arg.empty() ? 1.0 : number("a time in hours")};
  throw Error(ErrorKind::InvalidConfig,
              "--events must be none | scripted:FILE | endurance | exponential:MEAN | loaded:T, got '" + spec + "'");
}

struct SimSetup {
  SimConfig cfg;
  std::string policy = "both";
};

SimSetup sim_setup(const SimFlags& f, const SolverFlags& sf, const Json& cfg) {
  Json sim = cfg.value("sim", Json::object());
  for (const auto& [key, _] : sim.items()) {
    if (key != "horizon_h" && key != "policy" && key != "events" && key != "catalog") {
      throw Error(ErrorKind::Schema, "sim: unknown key '" + key + "'");
    }
  }
  SimSetup out;
  out.cfg.solver = solver_config(sf, cfg);
  out.cfg.horizon_h = f.horizon.value_or(sim.value("horizon_h", out.cfg.horizon_h));
  out.policy = f.policy.value_or(sim.value("policy", std::string("both")));
  if (out.policy != "both") out.cfg.policy = policy_from_string(out.policy);
  out.cfg.events = parse_events(f.events.value_or(sim.value("events", std::string("none"))));
  const std::string catalog = f.catalog.value_or(sim.value("catalog", std::string()));
  if (!catalog.empty()) out.cfg.catalog = load_platform_catalog(catalog);
#ifdef AIRSON_DEFAULT_CATALOG
  else if (fs::exists(AIRSON_DEFAULT_CATALOG)) out.cfg.catalog = load_platform_catalog(AIRSON_DEFAULT_CATALOG);
#endif
  out.cfg.validate();
  return out;
}

Scenario scenario_for(const std::string& path, const GenFlags& gf, const Json& cfg, std::uint64_t seed) {
  if (!path.empty()) return load_scenario(path);
  return generate_scenario(gen_config(gf, cfg), seed);
}

void add_gen_flags(CLI::App* app, GenFlags& f) {
  app->add_option("--ues", f.ues, "Number of UEs");
  app->add_option("--laps", f.laps, "Fleet size N");
  app->add_option("--side", f.side, "Region side length (m)");
  app->add_option("--hotspot-fraction", f.hotspot_fraction, "Share of UEs inside the hotspot");
  app->add_option("--hotspot-radius", f.hotspot_radius, "Hotspot radius (m)");
  app->add_option("--lap-altitude", f.lap_altitude, "LAP altitude (m)");
  app->add_option("--lap-tx", f.lap_tx, "LAP transmit power (dBm)");
  app->add_option("--lap-exponent", f.lap_exponent, "LAP pathloss exponent");
  app->add_option("--lap-capacity", f.lap_capacity, "Per-LAP UE capacity");
  app->add_option("--platform", f.platform, "Catalog platform name for every LAP");
}

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--solver", f.kind, "exhaustive | ga | pso | aco | random")
      ->check(CLI::IsMember({"exhaustive", "ga", "pso", "aco", "random"}));
  app->add_option("--grid-spacing", f.spacing, "Candidate grid spacing (m)");
  app->add_option("--budget", f.budget, "Exhaustive evaluation budget");
  app->add_option("--iters", f.iters, "Iterations for GA, PSO and ACO");
  app->add_option("--population", f.population, "Population, swarm, colony or sample count");
}

void add_sim_flags(CLI::App* app, SimFlags& f) {
  app->add_option("--events", f.events, "none | scripted:FILE | endurance | exponential:MEAN | loaded:T");
  app->add_option("--catalog", f.catalog, "Platform catalog CSV");
  app->add_option("--horizon", f.horizon, "Simulation horizon (h)");
  app->add_option("--format", f.format, "csv | json | both")->check(CLI::IsMember({"csv", "json", "both"}));
}

void print_placement(const Placement& p) {
  for (Eigen::Index n = 0; n < p.cols(); ++n) {
    std::printf("  LAP %ld: (%.2f, %.2f, %.2f)\n", static_cast<long>(n), p(0, n), p(1, n), p(2, n));
  }
}

void emit_trace(const SimTrace& t, const fs::path& dir, const std::string& format) {
  std::string stem = "trace_" + to_string(t.policy);
  std::transform(stem.begin(), stem.end(), stem.begin(), [](unsigned char c) { return std::tolower(c); });
  if (format != "json") write_trace_csv(trace_rows(t), dir / (stem + ".csv"), false);
  if (format != "csv") write_text_file(dir / (stem + ".json"), to_json(t).dump(2) + "\n");
}

void print_trace(const SimTrace& t) {
  std::cout << to_string(t.policy) << ":";
  for (const Epoch& e : t.epochs) std::printf(" t=%g:%d", e.time_h, e.captured);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Airborne SON simulator and LAP placement optimizer"};
  app.require_subcommand(1);
  Common common;
  GenFlags gen;
  SolverFlags solver;
  SimFlags sim;
  std::string scenario_path;
  int sweep = 1;
  std::string layer;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", common.seed, "Master seed (random when omitted)");
    sub->add_option("--out", common.out, "Output path");
  };

  CLI::App* generate = app.add_subcommand("generate", "Generate a scenario JSON");
  add_common(generate);
  add_gen_flags(generate, gen);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimize LAP placement for a scenario");
  add_common(solve_cmd);
  solve_cmd->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  add_solver_flags(solve_cmd, solver);
  solve_cmd->add_flag("--no-timing", common.no_timing, "Write wall_time_s as 0 for byte-stable outputs");

  CLI::App* simulate = app.add_subcommand("simulate", "Run a failure-event simulation");
  CLI::App* compare = app.add_subcommand("compare", "Run FIXED and REORGANIZE on a shared schedule");
  for (CLI::App* sub : {simulate, compare}) {
    add_common(sub);
    sub->add_option("--scenario", scenario_path, "Scenario JSON (generated from the seed when omitted)");
    add_gen_flags(sub, gen);
    add_solver_flags(sub, solver);
    add_sim_flags(sub, sim);
  }
  simulate->add_option("--policy", sim.policy, "fixed | reorganize | both")
      ->check(CLI::IsMember({"fixed", "reorganize", "both"}));
  compare->add_option("--seeds", sweep, "Number of consecutive seeds to sweep")->check(CLI::PositiveNumber);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List the platform catalog");
  std::string catalog_path;
#ifdef AIRSON_DEFAULT_CATALOG
  catalog_path = AIRSON_DEFAULT_CATALOG;
#endif
  catalog_cmd->add_option("--catalog", catalog_path, "Platform catalog CSV");
  catalog_cmd->add_option("--layer", layer, "LAP | MAP | HAP")->check(CLI::IsMember({"LAP", "MAP", "HAP"}));
  catalog_cmd->add_flag("--json", as_json, "Print JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (generate->parsed()) {
      const Json cfg = load_config(common);
      const ScenarioGenConfig g = gen_config(gen, cfg);
      const std::uint64_t seed = resolve_seed(common, cfg);
      Scenario s = generate_scenario(g, seed);
      fs::path out = generate->count("--out") ? fs::path(common.out) : fs::path("scenario.json");
      if (!generate->count("--out") && cfg.contains("output")) out = cfg["output"].get<std::string>();
      if (out.has_parent_path()) fs::create_directories(out.parent_path());
      Json j = to_json(s);
      j["seed"] = seed;
      write_text_file(out, j.dump(2) + "\n");
      std::printf("U=%d hotspot=%d side=%g laps=%d -> %s\n", static_cast<int>(s.ues.size()),
                  hotspot_ue_count(g.num_ues, g.hotspot.fraction), s.region.side, s.num_laps(),
                  out.string().c_str());
      return kOk;
    }

    if (solve_cmd->parsed()) {
      const Json cfg = load_config(common);
      const SolverConfig sc = solver_config(solver, cfg);
      const std::uint64_t seed = resolve_seed(common, cfg);
      const Scenario s = load_scenario(scenario_path);
      const fs::path dir = output_dir(common, cfg, solve_cmd->count("--out") > 0);
      SolverResult r = solve(s, sc, seed);
      r.seed = seed;
      if (common.no_timing) r.wall_time_s = 0.0;
      Json j = to_json(r);
      j["config"] = to_json(sc);
      write_text_file(dir / "result.json", j.dump(2) + "\n");
      write_history_csv(r, dir / "history.csv");
      std::printf("%s: best objective %d of %d UEs, %llu evaluations\n", r.solver.c_str(), r.best_objective,
                  static_cast<int>(s.ues.size()), static_cast<unsigned long long>(r.evaluations));
      print_placement(r.best_placement);
      return kOk;
    }

    if (simulate->parsed()) {
      const Json cfg = load_config(common);
      const SimSetup setup = sim_setup(sim, solver, cfg);
      const std::uint64_t seed = resolve_seed(common, cfg);
      const Scenario s = scenario_for(scenario_path, gen, cfg, seed);
      const fs::path dir = output_dir(common, cfg, simulate->count("--out") > 0);
      if (setup.policy == "both") {
        const PairedTrace p = compare_policies(s, setup.cfg, seed);
        emit_trace(p.fixed, dir, sim.format);
        emit_trace(p.reorganize, dir, sim.format);
        write_trace_csv(paired_rows(p), dir / "paired.csv", true);
        print_trace(p.fixed);
        print_trace(p.reorganize);
      } else {
        const SimTrace t = run_simulation(s, setup.cfg, seed);
        emit_trace(t, dir, sim.format);
        print_trace(t);
      }
      return kOk;
    }

    if (compare->parsed()) {
      const Json cfg = load_config(common);
      const SimSetup setup = sim_setup(sim, solver, cfg);
      const std::uint64_t base = resolve_seed(common, cfg);
      const fs::path dir = output_dir(common, cfg, compare->count("--out") > 0);
      std::vector<TraceRow> rows;
      double delta_sum = 0.0, final_sum = 0.0;
      int delta_count = 0, min_delta = std::numeric_limits<int>::max();
      for (int k = 0; k < sweep; ++k) {
        const std::uint64_t seed = base + static_cast<std::uint64_t>(k);
        const Scenario s = scenario_for(scenario_path, gen, cfg, seed);
        const PairedTrace p = compare_policies(s, setup.cfg, seed);
        const auto paired = paired_rows(p);
        rows.insert(rows.end(), paired.begin(), paired.end());
        for (int d : p.deltas) {
          delta_sum += d;
          min_delta = std::min(min_delta, d);
          ++delta_count;
        }
        final_sum += p.deltas.empty() ? 0 : p.deltas.back();
        if (sweep == 1) {
          if (sim.format != "csv") {
            emit_trace(p.fixed, dir, "json");
            emit_trace(p.reorganize, dir, "json");
          }
          print_trace(p.fixed);
          print_trace(p.reorganize);
        }
      }
      write_trace_csv(rows, dir / "paired.csv", true);
      const double mean_delta = delta_count ? delta_sum / delta_count : 0.0;
      std::ostringstream summary;
      summary << "first_seed,seeds,mean_delta,mean_final_delta,min_delta\n"
              << base << ',' << sweep << ',' << mean_delta << ',' << final_sum / sweep << ','
              << (delta_count ? min_delta : 0) << '\n';
      write_text_file(dir / "summary.csv", summary.str());
      std::printf("seeds=%d mean_delta=%.4f mean_final_delta=%.4f min_delta=%d\n", sweep, mean_delta,
                  final_sum / sweep, delta_count ? min_delta : 0);
      return kOk;
    }

    if (catalog_cmd->parsed()) {
      if (catalog_path.empty()) throw Error(ErrorKind::InvalidConfig, "--catalog is required");
      const auto records = load_platform_catalog(catalog_path);
      Json list = Json::array();
      auto cell = [](const std::optional<double>& v) {
        if (!v) return std::string("-");
        std::ostringstream os;
        os << *v;
        return os.str();
      };
      if (!as_json) std::printf("%-40s %-4s %-5s %6s %10s %10s\n", "name", "kind", "layer", "crew", "alt_m", "endur_h");
      for (const PlatformRecord& r : records) {
        const std::string l = r.layer ? std::string(to_string(*r.layer)) : "";
        if (!layer.empty() && l != layer) continue;
        const auto hours = endurance_hours(r.endurance);
        if (as_json) {
          list.push_back({{"name", r.name},
                          {"kind", std::string(1, to_char(r.kind))},
                          {"crewing", std::string(1, to_char(r.crewing))},
                          {"layer", l},
                          {"max_altitude_m", r.max_altitude_m ? Json(*r.max_altitude_m) : Json()},
                          {"payload_kg", r.payload_kg ? Json(*r.payload_kg) : Json()},
                          {"endurance_hours", hours ? Json(*hours) : Json()}});
        } else {
          std::printf("%-40s %-4c %-5s %6c %10s %10s\n", r.name.c_str(), to_char(r.kind), l.c_str(),
                      to_char(r.crewing), cell(r.max_altitude_m).c_str(), cell(hours).c_str());
        }
      }
      if (as_json) std::cout << Json{{"schema_version", kSchemaVersion}, {"platforms", list}}.dump(2) << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "error (config): " << e.what() << '\n';
    return kConfig;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
