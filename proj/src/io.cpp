#include "airson/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace airson {

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

/// Rejects keys outside `allowed` and reports any missing `required` key.
void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(where + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) schema_error(where + ": missing key '" + k + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) schema_error(where + ": unknown key '" + item.key() + "'");
  }
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) schema_error(where + ": expected a number");
  return j.get<double>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where + ": expected an integer");
  return j.get<int>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where + ": expected a string");
  return j.get<std::string>();
}

Json point_json(const Point3& p) { return Json::array({p.x(), p.y(), p.z()}); }

Point3 point_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) schema_error(where + ": expected [x, y, z]");
  return {number(j[0], where), number(j[1], where), number(j[2], where)};
}

Json lap_json(const LapSpec& lap) {
  Json j;
  j["altitude_m"] = lap.altitude_m;
  j["tx_power_dbm"] = lap.tx_power_dbm;
  j["antenna_gain_dbi"] = lap.antenna_gain_dbi;
  j["pathloss_exponent"] = lap.pathloss_exponent;
  j["capacity"] = lap.capacity ? Json(*lap.capacity) : Json("unbounded");
  if (lap.endurance_hours) {
    j["endurance_hours"] =
        std::isinf(*lap.endurance_hours) ? Json("unbounded") : Json(*lap.endurance_hours);
  }
  if (lap.platform_name) j["platform_name"] = *lap.platform_name;
  return j;
}

LapSpec lap_from(const Json& j, const std::string& where, LapSpec lap = {}, bool partial = false) {
  static constexpr std::initializer_list<const char*> all = {
      "altitude_m", "tx_power_dbm", "antenna_gain_dbi", "pathloss_exponent",
      "capacity", "endurance_hours", "platform_name"};
  if (partial) {
    check_keys(j, where, {}, all);
  } else {
    check_keys(j, where, {"altitude_m", "tx_power_dbm", "antenna_gain_dbi", "pathloss_exponent"},
               {"capacity", "endurance_hours", "platform_name"});
  }
  if (j.contains("altitude_m")) lap.altitude_m = number(j["altitude_m"], where + ".altitude_m");
  if (j.contains("tx_power_dbm")) lap.tx_power_dbm = number(j["tx_power_dbm"], where + ".tx_power_dbm");
  if (j.contains("antenna_gain_dbi")) {
    lap.antenna_gain_dbi = number(j["antenna_gain_dbi"], where + ".antenna_gain_dbi");
  }
  if (j.contains("pathloss_exponent")) {
    lap.pathloss_exponent = number(j["pathloss_exponent"], where + ".pathloss_exponent");
  }
  if (j.contains("capacity")) {
    const Json& c = j["capacity"];
    if (c.is_null() || (c.is_string() && c.get<std::string>() == "unbounded")) {
      lap.capacity.reset();
    } else {
      lap.capacity = integer(c, where + ".capacity");
    }
  }
  if (j.contains("endurance_hours")) {
    const Json& e = j["endurance_hours"];
    if (e.is_null()) {
      lap.endurance_hours.reset();
    } else if (e.is_string() && e.get<std::string>() == "unbounded") {
      lap.endurance_hours = std::numeric_limits<double>::infinity();
    } else {
      lap.endurance_hours = number(e, where + ".endurance_hours");
    }
  }
  if (j.contains("platform_name")) lap.platform_name = text(j["platform_name"], where + ".platform_name");
  return lap;
}

Json macro_json(const Macrocell& m) {
  Json j;
  j["pos"] = point_json(m.pos);
  j["tx_power_dbm"] = m.tx_power_dbm;
  j["antenna_gain_dbi"] = m.antenna_gain_dbi;
  j["pathloss_exponent"] = m.pathloss_exponent;
  return j;
}

Macrocell macro_from(const Json& j, Macrocell m = {}, bool partial = false) {
  if (partial) {
    check_keys(j, "macro", {}, {"pos", "tx_power_dbm", "antenna_gain_dbi", "pathloss_exponent"});
  } else {
    check_keys(j, "macro", {"pos", "tx_power_dbm", "antenna_gain_dbi", "pathloss_exponent"});
  }
  if (j.contains("pos")) m.pos = point_from(j["pos"], "macro.pos");
  if (j.contains("tx_power_dbm")) m.tx_power_dbm = number(j["tx_power_dbm"], "macro.tx_power_dbm");
  if (j.contains("antenna_gain_dbi")) {
    m.antenna_gain_dbi = number(j["antenna_gain_dbi"], "macro.antenna_gain_dbi");
  }
  if (j.contains("pathloss_exponent")) {
    m.pathloss_exponent = number(j["pathloss_exponent"], "macro.pathloss_exponent");
  }
  return m;
}

Json radio_json(const RadioModelConfig& r) {
  Json j;
  j["frequency_hz"] = r.frequency_hz;
  j["kind"] = to_string(r.kind);
  j["min_serving_rss_dbm"] = r.min_serving_rss_dbm;
  if (r.atg) {
    j["atg"] = {{"a", r.atg->a},
                {"b", r.atg->b},
                {"eta_los_db", r.atg->eta_los_db},
                {"eta_nlos_db", r.atg->eta_nlos_db}};
  }
  return j;
}

RadioModelConfig radio_from(const Json& j, RadioModelConfig r = {}, bool partial = false) {
  if (partial) {
    check_keys(j, "radio", {}, {"frequency_hz", "kind", "min_serving_rss_dbm", "atg"});
  } else {
    check_keys(j, "radio", {"frequency_hz", "kind", "min_serving_rss_dbm"}, {"atg"});
  }
  if (j.contains("frequency_hz")) r.frequency_hz = number(j["frequency_hz"], "radio.frequency_hz");
  if (j.contains("kind")) r.kind = pathloss_kind_from_string(text(j["kind"], "radio.kind"));
  if (j.contains("min_serving_rss_dbm")) {
    r.min_serving_rss_dbm = number(j["min_serving_rss_dbm"], "radio.min_serving_rss_dbm");
  }
  if (j.contains("atg")) {
    const Json& a = j["atg"];
    check_keys(a, "radio.atg", {}, {"a", "b", "eta_los_db", "eta_nlos_db"});
    AtgParams p = r.atg_or_default();
    if (a.contains("a")) p.a = number(a["a"], "radio.atg.a");
    if (a.contains("b")) p.b = number(a["b"], "radio.atg.b");
    if (a.contains("eta_los_db")) p.eta_los_db = number(a["eta_los_db"], "radio.atg.eta_los_db");
    if (a.contains("eta_nlos_db")) p.eta_nlos_db = number(a["eta_nlos_db"], "radio.atg.eta_nlos_db");
    r.atg = p;
  }
  return r;
}

Json hotspot_json(const HotspotConfig& h) {
  Json j;
  j["center"] = point_json(h.center);
  j["radius_m"] = h.radius_m;
  j["fraction"] = h.fraction;
  return j;
}

HotspotConfig hotspot_from(const Json& j, HotspotConfig h = {}, bool partial = false) {
  if (partial) {
    check_keys(j, "hotspot", {}, {"center", "radius_m", "fraction"});
  } else {
    check_keys(j, "hotspot", {"center", "radius_m", "fraction"});
  }
  if (j.contains("center")) h.center = point_from(j["center"], "hotspot.center");
  if (j.contains("radius_m")) h.radius_m = number(j["radius_m"], "hotspot.radius_m");
  if (j.contains("fraction")) h.fraction = number(j["fraction"], "hotspot.fraction");
  return h;
}

Json placement_json(const Placement& p) {
  Json arr = Json::array();
  for (Eigen::Index n = 0; n < p.cols(); ++n) arr.push_back(point_json(p.col(n)));
  return arr;
}

Placement placement_from(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": expected an array of points");
  Placement p(3, static_cast<Eigen::Index>(j.size()));
  for (std::size_t n = 0; n < j.size(); ++n) {
    p.col(static_cast<Eigen::Index>(n)) = point_from(j[n], where);
  }
  return p;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_cell(const std::string& cell, const std::string& where) {
  std::istringstream in(cell);
  T v{};
  in >> v;
  if (in.fail() || !in.eof()) throw Error(ErrorKind::Parse, where + ": bad value '" + cell + "'");
  return v;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

// --- files --------------------------------------------------------------

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

// --- scenario -----------------------------------------------------------

Json to_json(const Scenario& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["region"] = {{"side", s.region.side}};
  j["macro"] = macro_json(s.macro);
  Json ues = Json::array();
  for (const Ue& ue : s.ues) {
    ues.push_back({{"id", ue.id}, {"pos", point_json(ue.pos)}, {"in_hotspot", ue.in_hotspot}});
  }
  j["ues"] = std::move(ues);
  Json fleet = Json::array();
  for (const LapSpec& lap : s.fleet) fleet.push_back(lap_json(lap));
  j["fleet"] = std::move(fleet);
  j["radio"] = radio_json(s.radio);
  j["hotspot"] = hotspot_json(s.hotspot);
  return j;
}

Scenario scenario_from_json(const Json& j) {
  check_keys(j, "scenario", {"region", "macro", "ues", "fleet", "radio", "hotspot"}, {"schema_version", "seed"});
  if (j.contains("schema_version") && integer(j["schema_version"], "schema_version") != kSchemaVersion) {
    schema_error("unsupported schema_version");
  }
  Scenario s;
  check_keys(j["region"], "region", {"side"});
  s.region.side = number(j["region"]["side"], "region.side");
  s.macro = macro_from(j["macro"]);
  if (!j["ues"].is_array()) schema_error("ues: expected an array");
  for (std::size_t i = 0; i < j["ues"].size(); ++i) {
    const Json& u = j["ues"][i];
    const std::string where = "ues[" + std::to_string(i) + "]";
    check_keys(u, where, {"id", "pos"}, {"in_hotspot"});
    Ue ue;
    ue.id = integer(u["id"], where + ".id");
    ue.pos = point_from(u["pos"], where + ".pos");
    if (u.contains("in_hotspot")) {
      if (!u["in_hotspot"].is_boolean()) schema_error(where + ".in_hotspot: expected a boolean");
      ue.in_hotspot = u["in_hotspot"].get<bool>();
    }
    s.ues.push_back(ue);
  }
  if (!j["fleet"].is_array()) schema_error("fleet: expected an array");
  for (std::size_t i = 0; i < j["fleet"].size(); ++i) {
    s.fleet.push_back(lap_from(j["fleet"][i], "fleet[" + std::to_string(i) + "]"));
  }
  s.radio = radio_from(j["radio"]);
  s.hotspot = hotspot_from(j["hotspot"]);
  try {
    s.validate();
  } catch (const Error& e) {
    schema_error(e.what());
  }
  return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  write_text_file(path, to_json(s).dump(2) + "\n");
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_json_file(path));
}

Json to_json(const ScenarioGenConfig& cfg) {
  Json j;
  j["region"] = {{"side", cfg.region.side}};
  j["macro"] = macro_json(cfg.macro);
  j["hotspot"] = hotspot_json(cfg.hotspot);
  j["num_ues"] = cfg.num_ues;
  Json fleet = Json::array();
  for (const LapSpec& lap : cfg.fleet) fleet.push_back(lap_json(lap));
  j["fleet"] = std::move(fleet);
  j["radio"] = radio_json(cfg.radio);
  return j;
}

ScenarioGenConfig gen_config_from_json(const Json& j, ScenarioGenConfig base) {
  check_keys(j, "scenario", {}, {"region", "macro", "hotspot", "num_ues", "num_laps", "lap", "fleet", "radio"});
  if (j.contains("region")) {
    check_keys(j["region"], "region", {"side"});
    base.region.side = number(j["region"]["side"], "region.side");
  }
  if (j.contains("macro")) base.macro = macro_from(j["macro"], base.macro, true);
  if (j.contains("hotspot")) base.hotspot = hotspot_from(j["hotspot"], base.hotspot, true);
  if (j.contains("num_ues")) base.num_ues = integer(j["num_ues"], "num_ues");
  if (j.contains("radio")) base.radio = radio_from(j["radio"], base.radio, true);
  if (j.contains("fleet")) {
    if (!j["fleet"].is_array()) schema_error("fleet: expected an array");
    base.fleet.clear();
    for (std::size_t i = 0; i < j["fleet"].size(); ++i) {
      base.fleet.push_back(lap_from(j["fleet"][i], "fleet[" + std::to_string(i) + "]", LapSpec{}, true));
    }
  } else if (j.contains("num_laps") || j.contains("lap")) {
    // homogeneous fleet: num_laps copies of one template
    const LapSpec tmpl = j.contains("lap") ? lap_from(j["lap"], "lap", LapSpec{}, true)
                                           : (base.fleet.empty() ? LapSpec{} : base.fleet.front());
    const int n = j.contains("num_laps") ? integer(j["num_laps"], "num_laps")
                                         : static_cast<int>(base.fleet.size());
    if (n < 0) schema_error("num_laps must be >= 0");
    base.fleet.assign(static_cast<std::size_t>(n), tmpl);
  }
  return base;
}

// --- solver config / result ---------------------------------------------

SolverConfig solver_config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) schema_error("solver: expected an object with 'kind'");
  const std::string kind = text(j["kind"], "solver.kind");
  auto num = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    using F = std::decay_t<decltype(field)>;
    if constexpr (std::is_integral_v<F>) {
      if (!j[key].is_number_integer()) schema_error(std::string("solver.") + key + ": expected an integer");
      field = j[key].get<F>();
    } else {
      field = number(j[key], std::string("solver.") + key);
    }
  };
  if (kind == "exhaustive") {
    check_keys(j, "solver", {"kind"}, {"spacing", "budget"});
    ExhaustiveConfig c;
    num("spacing", c.spacing);
    num("budget", c.budget);
    return c;
  }
  if (kind == "ga") {
    check_keys(j, "solver", {"kind"}, {"population", "max_iters", "crossover_rate", "mutation_rate",
                                       "mutation_sigma_fraction", "tournament_size"});
    GaConfig c;
    num("population", c.population);
    num("max_iters", c.max_iters);
    num("crossover_rate", c.crossover_rate);
    num("mutation_rate", c.mutation_rate);
    num("mutation_sigma_fraction", c.mutation_sigma_fraction);
    num("tournament_size", c.tournament_size);
    return c;
  }
  if (kind == "pso") {
    check_keys(j, "solver", {"kind"}, {"particles", "max_iters", "inertia", "c1", "c2", "vmax_fraction"});
    PsoConfig c;
    num("particles", c.particles);
    num("max_iters", c.max_iters);
    num("inertia", c.inertia);
    num("c1", c.c1);
    num("c2", c.c2);
    num("vmax_fraction", c.vmax_fraction);
    return c;
  }
  if (kind == "aco") {
    check_keys(j, "solver", {"kind"}, {"ants", "max_iters", "evaporation", "pher_exp", "heur_exp", "spacing"});
    AcoConfig c;
    num("ants", c.ants);
    num("max_iters", c.max_iters);
    num("evaporation", c.evaporation);
    num("pher_exp", c.pher_exp);
    num("heur_exp", c.heur_exp);
    num("spacing", c.spacing);
    return c;
  }
  if (kind == "random") {
    check_keys(j, "solver", {"kind"}, {"samples"});
    RandomConfig c;
    num("samples", c.samples);
    return c;
  }
  schema_error("solver.kind: unknown solver '" + kind + "'");
}

Json to_json(const SolverConfig& cfg) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        Json j;
        if constexpr (std::is_same_v<T, ExhaustiveConfig>) {
          j = {{"kind", "exhaustive"}, {"spacing", c.spacing}, {"budget", c.budget}};
        } else if constexpr (std::is_same_v<T, GaConfig>) {
          j = {{"kind", "ga"},
               {"population", c.population},
               {"max_iters", c.max_iters},
               {"crossover_rate", c.crossover_rate},
               {"mutation_rate", c.mutation_rate},
               {"mutation_sigma_fraction", c.mutation_sigma_fraction},
               {"tournament_size", c.tournament_size}};
        } else if constexpr (std::is_same_v<T, PsoConfig>) {
          j = {{"kind", "pso"},     {"particles", c.particles}, {"max_iters", c.max_iters},
               {"inertia", c.inertia}, {"c1", c.c1},            {"c2", c.c2},
               {"vmax_fraction", c.vmax_fraction}};
        } else if constexpr (std::is_same_v<T, AcoConfig>) {
          j = {{"kind", "aco"},           {"ants", c.ants},         {"max_iters", c.max_iters},
               {"evaporation", c.evaporation}, {"pher_exp", c.pher_exp}, {"heur_exp", c.heur_exp},
               {"spacing", c.spacing}};
        } else {
          j = {{"kind", "random"}, {"samples", c.samples}};
        }
        return j;
      },
      cfg);
}

Json to_json(const SolverResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["solver"] = r.solver;
  j["seed"] = r.seed;
  j["best_objective"] = r.best_objective;
  j["best_placement"] = placement_json(r.best_placement);
  j["evaluations"] = r.evaluations;
  j["wall_time_s"] = r.wall_time_s;
  j["history"] = r.history;
  return j;
}

SolverResult solver_result_from_json(const Json& j) {
  check_keys(j, "result",
             {"solver", "seed", "best_objective", "best_placement", "evaluations", "history"},
             {"schema_version", "wall_time_s"});
  SolverResult r;
  r.solver = text(j["solver"], "solver");
  if (!j["seed"].is_number_unsigned()) schema_error("seed: expected an unsigned integer");
  r.seed = j["seed"].get<std::uint64_t>();
  r.best_objective = integer(j["best_objective"], "best_objective");
  r.best_placement = placement_from(j["best_placement"], "best_placement");
  if (!j["evaluations"].is_number_unsigned()) schema_error("evaluations: expected an unsigned integer");
  r.evaluations = j["evaluations"].get<std::uint64_t>();
  if (j.contains("wall_time_s")) r.wall_time_s = number(j["wall_time_s"], "wall_time_s");
  if (!j["history"].is_array()) schema_error("history: expected an array");
  for (const auto& h : j["history"]) r.history.push_back(integer(h, "history"));
  return r;
}

void save_solver_result(const SolverResult& r, const std::filesystem::path& path) {
  write_text_file(path, to_json(r).dump(2) + "\n");
}

SolverResult load_solver_result(const std::filesystem::path& path) {
  return solver_result_from_json(read_json_file(path));
}

void write_history_csv(const SolverResult& r, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "# seed=" << r.seed << '\n' << "iter,best_objective\n";
  for (std::size_t i = 0; i < r.history.size(); ++i) os << i << ',' << r.history[i] << '\n';
  write_text_file(path, os.str());
}

std::vector<int> read_history_csv(const std::filesystem::path& path) {
  auto lines = read_lines(path);
  // Leading comment lines carry provenance such as the seed.
  while (!lines.empty() && lines.front().starts_with('#')) lines.erase(lines.begin());
  if (lines.empty() || lines.front() != "iter,best_objective") {
    throw Error(ErrorKind::Parse, path.string() + ": missing header 'iter,best_objective'");
  }
  std::vector<int> history;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    if (cells.size() != 2) throw Error(ErrorKind::Parse, where + ": expected 2 columns");
    if (parse_cell<std::size_t>(cells[0], where) != i - 1) {
      throw Error(ErrorKind::Parse, where + ": iterations must be consecutive from 0");
    }
    history.push_back(parse_cell<int>(cells[1], where));
  }
  return history;
}

// --- traces ---------------------------------------------------------------

std::vector<TraceRow> trace_rows(const SimTrace& t) {
  std::vector<TraceRow> rows;
  for (std::size_t e = 0; e < t.epochs.size(); ++e) {
    const Epoch& ep = t.epochs[e];
    rows.push_back({t.policy, t.seed, static_cast<int>(e), ep.time_h, ep.active_count(), ep.captured,
                    std::nullopt});
  }
  return rows;
}

std::vector<TraceRow> paired_rows(const PairedTrace& p) {
  std::vector<TraceRow> rows = trace_rows(p.fixed);
  const std::vector<TraceRow> reorg = trace_rows(p.reorganize);
  rows.insert(rows.end(), reorg.begin(), reorg.end());
  const std::size_t n = p.deltas.size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].delta = p.deltas[i % n];
  return rows;
}

void write_trace_csv(const std::vector<TraceRow>& rows, const std::filesystem::path& path,
                     bool with_delta) {
  std::ostringstream os;
  os << "policy,seed,epoch,time_h,active_laps,captured" << (with_delta ? ",delta" : "") << '\n';
  for (const TraceRow& r : rows) {
    os << to_string(r.policy) << ',' << r.seed << ',' << r.epoch << ',' << fmt_double(r.time_h) << ','
       << r.active_laps << ',' << r.captured;
    if (with_delta) os << ',' << r.delta.value_or(0);
    os << '\n';
  }
  write_text_file(path, os.str());
}

std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw Error(ErrorKind::Parse, path.string() + ": empty trace file");
  bool with_delta = false;
  if (lines.front() == "policy,seed,epoch,time_h,active_laps,captured,delta") {
    with_delta = true;
  } else if (lines.front() != "policy,seed,epoch,time_h,active_laps,captured") {
    throw Error(ErrorKind::Parse, path.string() + ": unexpected trace header");
  }
  std::vector<TraceRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    if (cells.size() != (with_delta ? 7u : 6u)) throw Error(ErrorKind::Parse, where + ": wrong column count");
    TraceRow r;
    try {
      r.policy = policy_from_string(cells[0]);
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, where + ": unknown policy '" + cells[0] + "'");
    }
    r.seed = parse_cell<std::uint64_t>(cells[1], where);
    r.epoch = parse_cell<int>(cells[2], where);
    r.time_h = parse_cell<double>(cells[3], where);
    r.active_laps = parse_cell<int>(cells[4], where);
    r.captured = parse_cell<int>(cells[5], where);
    if (with_delta) r.delta = parse_cell<int>(cells[6], where);
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const SimTrace& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["policy"] = to_string(t.policy);
  j["seed"] = t.seed;
  Json epochs = Json::array();
  for (const Epoch& e : t.epochs) {
    epochs.push_back({{"time_h", e.time_h},
                      {"active_laps", e.active_laps},
                      {"placement", placement_json(e.placement)},
                      {"captured", e.captured},
                      {"solver_evals", e.solver_evals}});
  }
  j["epochs"] = std::move(epochs);
  return j;
}

SimTrace sim_trace_from_json(const Json& j) {
  check_keys(j, "trace", {"policy", "seed", "epochs"}, {"schema_version"});
  SimTrace t;
  t.policy = policy_from_string(text(j["policy"], "policy"));
  t.seed = j["seed"].get<std::uint64_t>();
  for (const Json& e : j["epochs"]) {
    check_keys(e, "epoch", {"time_h", "active_laps", "placement", "captured", "solver_evals"});
    Epoch ep;
    ep.time_h = number(e["time_h"], "epoch.time_h");
    for (const Json& a : e["active_laps"]) ep.active_laps.push_back(integer(a, "epoch.active_laps"));
    ep.placement = placement_from(e["placement"], "epoch.placement");
    ep.captured = integer(e["captured"], "epoch.captured");
    ep.solver_evals = e["solver_evals"].get<std::uint64_t>();
    t.epochs.push_back(std::move(ep));
  }
  return t;
}

// --- events ---------------------------------------------------------------

std::vector<FailureEvent> load_events(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  check_keys(j, "events file", {"events"}, {"schema_version"});
  if (!j["events"].is_array()) schema_error("events: expected an array");
  std::vector<FailureEvent> events;
  for (std::size_t i = 0; i < j["events"].size(); ++i) {
    const Json& e = j["events"][i];
    const std::string where = "events[" + std::to_string(i) + "]";
    check_keys(e, where, {"time_h", "lap_index"}, {"cause"});
    FailureEvent ev;
    ev.time_h = number(e["time_h"], where + ".time_h");
    ev.lap_index = integer(e["lap_index"], where + ".lap_index");
    if (e.contains("cause")) ev.cause = failure_cause_from_string(text(e["cause"], where + ".cause"));
    events.push_back(ev);
  }
  return events;
}

void save_events(const std::vector<FailureEvent>& events, const std::filesystem::path& path) {
  Json arr = Json::array();
  for (const FailureEvent& e : events) {
    arr.push_back({{"time_h", e.time_h}, {"lap_index", e.lap_index}, {"cause", to_string(e.cause)}});
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["events"] = std::move(arr);
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace airson
