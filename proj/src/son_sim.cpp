#include "airson/son_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "airson/rng.hpp"

namespace airson {

std::string to_string(Policy p) { return p == Policy::Fixed ? "FIXED" : "REORGANIZE"; }

Policy policy_from_string(const std::string& name) {
  if (name == "FIXED" || name == "fixed") return Policy::Fixed;
  if (name == "REORGANIZE" || name == "reorganize") return Policy::Reorganize;
  throw Error(ErrorKind::InvalidConfig, "unknown policy '" + name + "'");
}

std::string to_string(FailureCause c) {
  switch (c) {
    case FailureCause::Battery: return "BATTERY";
    case FailureCause::Weather: return "WEATHER";
    case FailureCause::Surveillance: return "SURVEILLANCE";
    case FailureCause::Scripted: return "SCRIPTED";
  }
  return "SCRIPTED";
}

FailureCause failure_cause_from_string(const std::string& name) {
  if (name == "BATTERY") return FailureCause::Battery;
  if (name == "WEATHER") return FailureCause::Weather;
  if (name == "SURVEILLANCE") return FailureCause::Surveillance;
  if (name == "SCRIPTED") return FailureCause::Scripted;
  throw Error(ErrorKind::Schema, "unknown failure cause '" + name + "'");
}

void SimConfig::validate() const {
  if (!(horizon_h > 0.0)) throw Error(ErrorKind::InvalidConfig, "horizon must be > 0");
  if (const auto* e = std::get_if<ExponentialEvents>(&events); e && !(e->mean_ttf_h > 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "mean time to failure must be > 0");
  }
  if (const auto* l = std::get_if<LoadedLapLoss>(&events); l && !(l->time_h >= 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "event times must be >= 0");
  }
  if (const auto* sc = std::get_if<ScriptedEvents>(&events)) {
    for (std::size_t i = 0; i < sc->events.size(); ++i) {
      if (!(sc->events[i].time_h >= 0.0)) {
        throw Error(ErrorKind::InvalidConfig, "event times must be >= 0");
      }
      if (i > 0 && sc->events[i].time_h < sc->events[i - 1].time_h) {
        throw Error(ErrorKind::InvalidConfig, "scripted event times must be non-decreasing");
      }
    }
  }
  airson::validate(solver);
}

namespace {

void sort_events(std::vector<FailureEvent>& events) {
  std::stable_sort(events.begin(), events.end(), [](const FailureEvent& a, const FailureEvent& b) {
    return a.time_h < b.time_h || (a.time_h == b.time_h && a.lap_index < b.lap_index);
  });
}

}  // namespace

std::vector<FailureEvent> schedule_failures_from_endurance(
    const std::vector<LapSpec>& fleet, const std::vector<PlatformRecord>* catalog,
    double horizon_h) {
  std::vector<FailureEvent> events;
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    const LapSpec& lap = fleet[i];
    std::optional<double> hours;
    if (lap.endurance_hours) {
      hours = *lap.endurance_hours;
    } else {
      const PlatformRecord* rec =
          (catalog && lap.platform_name) ? find_platform(*catalog, *lap.platform_name) : nullptr;
      if (!rec) {
        throw Error(ErrorKind::UnknownPlatform,
                    "LAP " + std::to_string(i) + " has no endurance and platform '" +
                        lap.platform_name.value_or("") + "' is not in the catalog");
      }
      hours = endurance_hours(rec->endurance);
    }
    if (hours && std::isfinite(*hours) && *hours <= horizon_h) {
      events.push_back({*hours, static_cast<int>(i), FailureCause::Battery});
    }
  }
  sort_events(events);
  return events;
}

std::vector<FailureEvent> resolve_schedule(const Scenario& s, const SimConfig& cfg,
                                           std::uint64_t seed) {
  std::vector<FailureEvent> events = std::visit(
      [&](const auto& src) -> std::vector<FailureEvent> {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ScriptedEvents>) {
          return src.events;
        } else if constexpr (std::is_same_v<T, EnduranceEvents>) {
          return schedule_failures_from_endurance(s.fleet, cfg.catalog ? &*cfg.catalog : nullptr,
                                                  cfg.horizon_h);
        } else if constexpr (std::is_same_v<T, LoadedLapLoss>) {
          if (s.num_laps() == 0) return {};
          const SolverResult r = solve(s, cfg.solver, seed);
          const auto loads =
              lap_loads(associate(s, compute_rss_matrix(s, r.best_placement)), s.num_laps());
          const auto busiest = std::max_element(loads.begin(), loads.end()) - loads.begin();
          return {{src.time_h, static_cast<int>(busiest), FailureCause::Scripted}};
        } else {
          Rng rng = make_rng(seed, stream::kEvents);
          std::exponential_distribution<double> ttf(1.0 / src.mean_ttf_h);
          std::vector<FailureEvent> out;
          for (int i = 0; i < s.num_laps(); ++i) {
            out.push_back({ttf(rng), i, FailureCause::Weather});
          }
          sort_events(out);
          return out;
        }
      },
      cfg.events);
  std::erase_if(events, [&](const FailureEvent& e) { return e.time_h > cfg.horizon_h; });
  return events;
}

SimTrace run_simulation(const Scenario& s, const SimConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const std::vector<FailureEvent> schedule = resolve_schedule(s, cfg, seed);

  SimTrace trace;
  trace.policy = cfg.policy;
  trace.seed = seed;

  const SolverResult initial = solve(s, cfg.solver, seed);
  Epoch current;
  current.time_h = 0.0;
  for (int i = 0; i < s.num_laps(); ++i) current.active_laps.push_back(i);
  current.placement = initial.best_placement;
  current.captured = objective(s, current.placement);
  current.solver_evals = initial.evaluations;
  trace.epochs.push_back(current);

  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const FailureEvent& ev = schedule[k];
    const auto it = std::find(current.active_laps.begin(), current.active_laps.end(), ev.lap_index);
    if (it == current.active_laps.end()) {
      throw Error(ErrorKind::EventIndexInvalid,
                  "event " + std::to_string(k) + " removes LAP " + std::to_string(ev.lap_index) +
                      ", which is not active");
    }
    const auto col = static_cast<Eigen::Index>(it - current.active_laps.begin());
    current.active_laps.erase(it);

    std::vector<LapSpec> survivors;
    for (int i : current.active_laps) survivors.push_back(s.fleet[i]);
    const Scenario reduced = s.with_fleet(std::move(survivors));

    Placement kept(3, current.placement.cols() - 1);
    kept << current.placement.leftCols(col), current.placement.rightCols(kept.cols() - col);

    current.time_h = ev.time_h;
    if (cfg.policy == Policy::Fixed) {
      current.placement = std::move(kept);
      current.solver_evals = 0;
    } else {
      const SolverResult r = solve(reduced, cfg.solver, derive_seed(seed, stream::kResolveBase + k));
      current.placement = r.best_placement;
      current.solver_evals = r.evaluations;
    }
    current.captured = objective(reduced, current.placement);
    trace.epochs.push_back(current);
  }
  return trace;
}

PairedTrace compare_policies(const Scenario& s, const SimConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  SimConfig shared = cfg;
  shared.events = ScriptedEvents{resolve_schedule(s, cfg, seed)};

  PairedTrace out;
  shared.policy = Policy::Fixed;
  out.fixed = run_simulation(s, shared, seed);
  shared.policy = Policy::Reorganize;
  out.reorganize = run_simulation(s, shared, seed);

  for (std::size_t e = 0; e < out.fixed.epochs.size(); ++e) {
    out.deltas.push_back(out.reorganize.epochs[e].captured - out.fixed.epochs[e].captured);
  }
  return out;
}

}  // namespace airson
