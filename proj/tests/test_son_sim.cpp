#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "airson/son_sim.hpp"

using namespace airson;

namespace {

const std::vector<PlatformRecord>& catalog() {
  static const auto c = load_platform_catalog(std::filesystem::path(AIRSON_DATA_DIR) / "table1.csv");
  return c;
}

LapSpec platform(const std::string& name) {
  LapSpec lap;
  lap.platform_name = name;
  return lap;
}

Scenario caption_scenario(int num_laps, std::uint64_t seed) {
  ScenarioGenConfig cfg;
  cfg.fleet = std::vector<LapSpec>(static_cast<std::size_t>(num_laps));
  return generate_scenario(cfg, seed);
}

void check_trace_consistent(const Scenario& s, const SimTrace& t) {
  for (std::size_t e = 0; e < t.epochs.size(); ++e) {
    const Epoch& ep = t.epochs[e];
    std::vector<LapSpec> fleet;
    for (int i : ep.active_laps) fleet.push_back(s.fleet[i]);
    CHECK(objective(s.with_fleet(fleet), ep.placement) == ep.captured);
    if (e > 0) {
      CHECK(ep.time_h >= t.epochs[e - 1].time_h);
      CHECK(ep.active_count() <= t.epochs[e - 1].active_count());
    }
  }
}

}  // namespace

TEST_CASE("endurance schedule from the catalog") {
  const std::vector<LapSpec> amazon(3, platform("Amazon Drone"));
  const auto events = schedule_failures_from_endurance(amazon, &catalog());
  REQUIRE(events.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(events[i].time_h == 0.5);
    CHECK(events[i].lap_index == i);
    CHECK(events[i].cause == FailureCause::Battery);
  }

  const auto mixed = schedule_failures_from_endurance({platform("Protonex"), platform("MD4-1000 (DHL)")}, &catalog());
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].time_h == 0.8);
  CHECK(mixed[0].lap_index == 1);
  CHECK(mixed[1].time_h == 9.0);

  LapSpec unbounded;
  unbounded.endurance_hours = std::numeric_limits<double>::infinity();
  CHECK(schedule_failures_from_endurance({unbounded}, nullptr).empty());
  CHECK(schedule_failures_from_endurance({platform("SkyHook (Helikites)")}, &catalog()).empty());

  LapSpec direct;
  direct.endurance_hours = 2.0;
  CHECK(schedule_failures_from_endurance({direct}, nullptr, 1.0).empty());
  CHECK(schedule_failures_from_endurance({direct}, nullptr, 2.0).size() == 1);

  try {
    schedule_failures_from_endurance({platform("Nonexistent Blimp")}, &catalog());
    FAIL("expected UnknownPlatform");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPlatform);
  }
  CHECK_THROWS_AS(schedule_failures_from_endurance({LapSpec{}}, nullptr), Error);
}

TEST_CASE("no events: single epoch, both policies identical") {
  const Scenario s = caption_scenario(2, 3);
  SimConfig cfg;
  cfg.events = ScriptedEvents{{{30.0, 0, FailureCause::Scripted}}};  // beyond the horizon
  cfg.horizon_h = 24;
  const PairedTrace p = compare_policies(s, cfg, 5);
  REQUIRE(p.fixed.epochs.size() == 1);
  REQUIRE(p.reorganize.epochs.size() == 1);
  CHECK(p.fixed.epochs[0].captured == p.reorganize.epochs[0].captured);
  CHECK(p.fixed.epochs[0].placement == p.reorganize.epochs[0].placement);
  CHECK(p.deltas == std::vector<int>{0});
}

TEST_CASE("one scripted loss: reorganizing never does worse") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Scenario s = caption_scenario(2, seed);
    SimConfig cfg;
    cfg.events = ScriptedEvents{{{1.0, 0, FailureCause::Scripted}}};
    const PairedTrace p = compare_policies(s, cfg, seed);
    REQUIRE(p.fixed.epochs.size() == 2);
    CHECK(p.reorganize.epochs[1].captured >= p.fixed.epochs[1].captured);
    CHECK(p.fixed.epochs[1].time_h == 1.0);
    CHECK(p.fixed.epochs[1].solver_evals == 0u);
    CHECK(p.reorganize.epochs[1].solver_evals == binomial(25, 1));
    check_trace_consistent(s, p.fixed);
    check_trace_consistent(s, p.reorganize);
  }
}

TEST_CASE("caption scenario, N = 3 -> 2 -> 1 scripted losses") {
  const Scenario s = caption_scenario(3, 17);
  SimConfig cfg;
  cfg.events = ScriptedEvents{{{1.0, 1, FailureCause::Weather}, {2.0, 0, FailureCause::Battery}}};
  const PairedTrace p = compare_policies(s, cfg, 17);
  REQUIRE(p.fixed.epochs.size() == 3);
  for (std::size_t e = 0; e < 3; ++e) {
    CHECK(p.reorganize.epochs[e].captured >= p.fixed.epochs[e].captured);
    CHECK(p.reorganize.epochs[e].time_h == p.fixed.epochs[e].time_h);
    CHECK(p.deltas[e] == p.reorganize.epochs[e].captured - p.fixed.epochs[e].captured);
  }
  CHECK(p.fixed.epochs[2].active_laps == std::vector<int>{2});
  check_trace_consistent(s, p.reorganize);
}

TEST_CASE("loss of the most loaded LAP") {
  const Scenario s = caption_scenario(3, 4);
  SimConfig cfg;
  cfg.events = LoadedLapLoss{1.5};
  const auto schedule = resolve_schedule(s, cfg, 4);
  REQUIRE(schedule.size() == 1);
  const SolverResult r = solve(s, cfg.solver, 4);
  const auto loads = lap_loads(associate(s, compute_rss_matrix(s, r.best_placement)), 3);
  CHECK(loads[schedule[0].lap_index] == *std::max_element(loads.begin(), loads.end()));
  CHECK(schedule[0].time_h == 1.5);
}

TEST_CASE("zero-LAP scenario stays flat at zero") {
  const Scenario s = caption_scenario(0, 1);
  SimConfig cfg;
  const PairedTrace p = compare_policies(s, cfg, 1);
  for (const auto* t : {&p.fixed, &p.reorganize}) {
    for (const Epoch& e : t->epochs) CHECK(e.captured == 0);
  }
}

TEST_CASE("invalid events") {
  const Scenario s = caption_scenario(2, 1);
  SimConfig cfg;
  cfg.events = ScriptedEvents{{{1.0, 5, FailureCause::Scripted}}};
  try {
    run_simulation(s, cfg, 1);
    FAIL("expected EventIndexInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EventIndexInvalid);
  }
  cfg.events = ScriptedEvents{{{1.0, 0, FailureCause::Scripted}, {2.0, 0, FailureCause::Scripted}}};
  CHECK_THROWS_AS(run_simulation(s, cfg, 1), Error);
  cfg.events = ScriptedEvents{{{2.0, 0, FailureCause::Scripted}, {1.0, 1, FailureCause::Scripted}}};
  CHECK_THROWS_AS(run_simulation(s, cfg, 1), Error);
  cfg.events = ExponentialEvents{0.0};
  CHECK_THROWS_AS(run_simulation(s, cfg, 1), Error);
  cfg.events = ScriptedEvents{};
  cfg.horizon_h = 0;
  CHECK_THROWS_AS(run_simulation(s, cfg, 1), Error);
}

TEST_CASE("exponential failures: at most one per LAP, deterministic, shared by both policies") {
  const Scenario s = caption_scenario(3, 9);
  SimConfig cfg;
  cfg.events = ExponentialEvents{2.0};
  cfg.horizon_h = 1000;
  const auto a = resolve_schedule(s, cfg, 21);
  CHECK(a == resolve_schedule(s, cfg, 21));
  CHECK(a.size() == 3);
  std::vector<int> laps;
  for (const auto& e : a) laps.push_back(e.lap_index);
  std::sort(laps.begin(), laps.end());
  CHECK(laps == std::vector<int>{0, 1, 2});
  CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.time_h < y.time_h; }));

  const PairedTrace p = compare_policies(s, cfg, 21);
  REQUIRE(p.fixed.epochs.size() == p.reorganize.epochs.size());
  for (std::size_t e = 0; e < p.fixed.epochs.size(); ++e) {
    CHECK(p.fixed.epochs[e].time_h == p.reorganize.epochs[e].time_h);
    CHECK(p.reorganize.epochs[e].captured >= p.fixed.epochs[e].captured);
  }
  CHECK(p.fixed.epochs.back().active_count() == 0);
}

TEST_CASE("endurance-driven simulation with an Amazon Drone fleet") {
  ScenarioGenConfig gen;
  gen.fleet = std::vector<LapSpec>(2, platform("Amazon Drone"));
  const Scenario s = generate_scenario(gen, 2);
  SimConfig cfg;
  cfg.events = EnduranceEvents{};
  cfg.catalog = catalog();
  cfg.policy = Policy::Reorganize;
  const SimTrace t = run_simulation(s, cfg, 2);
  REQUIRE(t.epochs.size() == 3);
  CHECK(t.epochs[1].time_h == 0.5);
  CHECK(t.epochs[2].active_count() == 0);
}

TEST_CASE("identical inputs give identical paired traces, including with a stochastic solver") {
  const Scenario s = caption_scenario(3, 6);
  SimConfig cfg;
  GaConfig ga;
  ga.population = 10;
  ga.max_iters = 10;
  cfg.solver = ga;
  cfg.events = ExponentialEvents{5.0};
  cfg.horizon_h = 100;
  const PairedTrace a = compare_policies(s, cfg, 33);
  const PairedTrace b = compare_policies(s, cfg, 33);
  REQUIRE(a.reorganize.epochs.size() == b.reorganize.epochs.size());
  for (std::size_t e = 0; e < a.reorganize.epochs.size(); ++e) {
    CHECK(a.reorganize.epochs[e].placement == b.reorganize.epochs[e].placement);
    CHECK(a.fixed.epochs[e].placement == b.fixed.epochs[e].placement);
  }
  CHECK(a.deltas == b.deltas);
  check_trace_consistent(s, a.reorganize);
  check_trace_consistent(s, a.fixed);
}
