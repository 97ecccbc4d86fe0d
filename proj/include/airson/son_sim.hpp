#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "airson/association.hpp"
#include "airson/catalog.hpp"
#include "airson/scenario.hpp"
#include "airson/solvers.hpp"

namespace airson {

enum class FailureCause { Battery, Weather, Surveillance, Scripted };
enum class Policy { Fixed, Reorganize };

struct FailureEvent {
  double time_h = 0.0;
  int lap_index = 0;  // 0-based index into the original fleet
  FailureCause cause = FailureCause::Scripted;

  bool operator==(const FailureEvent&) const = default;
};

struct ScriptedEvents {
  std::vector<FailureEvent> events;
};
/// One battery failure per LAP at its endurance (LapSpec or catalog lookup).
struct EnduranceEvents {};
/// Independent exponential time-to-failure per LAP, at most one failure each.
struct ExponentialEvents {
  double mean_ttf_h = 1.0;
};
/// A single scripted loss of whichever LAP serves the most UEs in the t = 0
/// solution (lowest index on ties).
struct LoadedLapLoss {
  double time_h = 1.0;
};
using EventSource =
    std::variant<ScriptedEvents, EnduranceEvents, ExponentialEvents, LoadedLapLoss>;

struct SimConfig {
  double horizon_h = 24.0;
  Policy policy = Policy::Reorganize;
  EventSource events = ScriptedEvents{};
  SolverConfig solver = ExhaustiveConfig{};
  std::optional<std::vector<PlatformRecord>> catalog;

  void validate() const;
};

struct Epoch {
  double time_h = 0.0;
  std::vector<int> active_laps;  // original fleet indices, one per placement column
  Placement placement;
  int captured = 0;
  std::uint64_t solver_evals = 0;

  int active_count() const { return static_cast<int>(active_laps.size()); }
};

struct SimTrace {
  Policy policy = Policy::Fixed;
  std::uint64_t seed = 0;
  std::vector<Epoch> epochs;
};

struct PairedTrace {
  SimTrace fixed;
  SimTrace reorganize;
  std::vector<int> deltas;  // reorganize.captured - fixed.captured per epoch
};

std::string to_string(Policy p);
Policy policy_from_string(const std::string& name);
std::string to_string(FailureCause c);
FailureCause failure_cause_from_string(const std::string& name);

/// Events sorted by time then LAP index; only those at or before `horizon_h`.
/// Throws UnknownPlatform when a LAP has no endurance and its platform is not
/// in the catalog.
std::vector<FailureEvent> schedule_failures_from_endurance(
    const std::vector<LapSpec>& fleet, const std::vector<PlatformRecord>* catalog,
    double horizon_h = std::numeric_limits<double>::infinity());

/// The concrete, time-sorted schedule `cfg.events` produces for this seed.
std::vector<FailureEvent> resolve_schedule(const Scenario& s, const SimConfig& cfg,
                                           std::uint64_t seed);

/// Throws EventIndexInvalid when an event names a LAP that is not alive.
SimTrace run_simulation(const Scenario& s, const SimConfig& cfg, std::uint64_t seed);

/// Both policies on one shared schedule; cfg.policy is ignored.
PairedTrace compare_policies(const Scenario& s, const SimConfig& cfg, std::uint64_t seed);

}  // namespace airson
