#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "airson/scenario.hpp"
#include "airson/son_sim.hpp"
#include "airson/solvers.hpp"

namespace airson {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Scenario files. Unknown or missing keys raise Error{Schema}.
Json to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

/// Keys present in `j` override `base`; used for layered config files.
ScenarioGenConfig gen_config_from_json(const Json& j, ScenarioGenConfig base = {});
Json to_json(const ScenarioGenConfig& cfg);

/// {"kind": "ga", "population": 40, ...}; missing knobs keep their defaults.
SolverConfig solver_config_from_json(const Json& j);
Json to_json(const SolverConfig& cfg);

Json to_json(const SolverResult& r);
SolverResult solver_result_from_json(const Json& j);
void save_solver_result(const SolverResult& r, const std::filesystem::path& path);
SolverResult load_solver_result(const std::filesystem::path& path);

/// `iter,best_objective`
void write_history_csv(const SolverResult& r, const std::filesystem::path& path);
std::vector<int> read_history_csv(const std::filesystem::path& path);

struct TraceRow {
  Policy policy = Policy::Fixed;
  std::uint64_t seed = 0;
  int epoch = 0;
  double time_h = 0.0;
  int active_laps = 0;
  int captured = 0;
  std::optional<int> delta;

  bool operator==(const TraceRow&) const = default;
};

std::vector<TraceRow> trace_rows(const SimTrace& t);
std::vector<TraceRow> paired_rows(const PairedTrace& p);

/// `policy,seed,epoch,time_h,active_laps,captured` (+ `,delta` when paired).
void write_trace_csv(const std::vector<TraceRow>& rows, const std::filesystem::path& path,
                     bool with_delta);
std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path);

Json to_json(const SimTrace& t);
SimTrace sim_trace_from_json(const Json& j);

/// {"events": [{"time_h": 1.0, "lap_index": 0, "cause": "SCRIPTED"}, ...]}
std::vector<FailureEvent> load_events(const std::filesystem::path& path);
void save_events(const std::vector<FailureEvent>& events, const std::filesystem::path& path);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace airson
