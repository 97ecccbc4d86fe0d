#include <doctest.h>

#include <algorithm>

#include "airson/solvers.hpp"
#include "oracle/brute_force.hpp"
#include "support/generators.hpp"
#include "support/properties.hpp"

using namespace airson;

namespace {

Scenario caption_scenario(int num_laps, std::uint64_t seed) {
  ScenarioGenConfig cfg;
  cfg.fleet = std::vector<LapSpec>(static_cast<std::size_t>(num_laps));
  return generate_scenario(cfg, seed);
}

/// Two-cell world (side 800, spacing 400 => cells at 200 and 600 on the
/// bottom row) with all UEs clustered under cell 0.
Scenario clustered_scenario() {
  Scenario s;
  s.region.side = 800;
  s.macro.pos = {790, 790, 30};
  s.macro.tx_power_dbm = 0;
  for (int u = 0; u < 3; ++u) s.ues.push_back({u + 1, Point3(200.0 + 5 * u, 200, 0), false});
  s.fleet = {LapSpec{}};
  return s;
}

}  // namespace

TEST_CASE("candidate grid sizes") {
  CHECK(build_candidate_grid(Region{2000}, 400, 200).size() == 25);
  CHECK(build_candidate_grid(Region{2000}, 250, 200).size() == 64);
  const auto one = build_candidate_grid(Region{2000}, 2000, 150);
  REQUIRE(one.size() == 1);
  CHECK(one.cells.col(0) == Point3(1000, 1000, 150));
  const auto g = build_candidate_grid(Region{2000}, 400, 200);
  CHECK(g.cells.col(0) == Point3(200, 200, 200));
  CHECK(g.cells.col(1) == Point3(600, 200, 200));  // x fastest
  CHECK(g.cells.col(5) == Point3(200, 600, 200));
  try {
    build_candidate_grid(Region{2000}, 2500, 200);
    FAIL("expected SpacingTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpacingTooLarge);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(25, 2) == 300);
  CHECK(binomial(64, 3) == 41664);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("exhaustive: dominant cell and tie-break") {
  Scenario s = clustered_scenario();
  const auto grid = build_candidate_grid(s.region, 400, 200);
  const SolverResult r = solve_exhaustive(s, grid, 100);
  CHECK(r.best_placement.col(0).head<2>() == Eigen::Vector2d(200, 200));
  CHECK(r.best_objective == 3);
  CHECK(r.evaluations == 4);

  // nothing captured anywhere: every cell ties at 0, lowest index wins
  s.fleet[0].tx_power_dbm = -200;
  const SolverResult tie = solve_exhaustive(s, grid, 100);
  CHECK(tie.best_objective == 0);
  CHECK(tie.best_placement.col(0).head<2>() == Eigen::Vector2d(200, 200));
}

TEST_CASE("exhaustive: budget and accounting") {
  const Scenario s = caption_scenario(3, 1);
  try {
    solve_exhaustive(s, ExhaustiveConfig{250, 1000});
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(std::string(e.what()).find("41664") != std::string::npos);
  }
  const SolverResult r = solve_exhaustive(s, ExhaustiveConfig{400, 10000});
  CHECK(r.evaluations == binomial(25, 3));
  CHECK(objective(s, r.best_placement) == r.best_objective);
  CHECK(r.history == std::vector<int>{r.best_objective});
}

TEST_CASE("exhaustive equals the brute-force oracle on the caption scenario, N=2, 5x5") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Scenario s = caption_scenario(2, seed);
    const SolverResult r = solve_exhaustive(s, ExhaustiveConfig{400});
    const int expected = oracle::best_subset(testgen::oracle_world(s), testgen::oracle_cells(2000, 400),
                                             testgen::oracle_fleet(s));
    CHECK(r.best_objective == expected);
  }
}

TEST_CASE("GA: elitist fixed point, determinism, accounting") {
  const Scenario s = caption_scenario(2, 5);
  Placement start(3, 2);
  start << 300, 1700, 1800, 250, 200, 200;
  GaConfig cfg;
  cfg.population = 10;
  cfg.max_iters = 15;
  cfg.crossover_rate = 0;
  cfg.mutation_rate = 0;
  const std::vector<Placement> seeded(10, start);
  const SolverResult fixed = solve_ga(s, cfg, 1, seeded);
  const int value = objective(s, start);
  CHECK(std::all_of(fixed.history.begin(), fixed.history.end(), [&](int h) { return h == value; }));
  CHECK(fixed.best_placement == start);

  const GaConfig defaults;
  const SolverResult a = solve_ga(s, defaults, 7);
  const SolverResult b = solve_ga(s, defaults, 7);
  CHECK(props::same_result(a, b));
  CHECK(a.evaluations == std::uint64_t(defaults.population) * (1 + defaults.max_iters));
  CHECK(a.history.size() == std::size_t(defaults.max_iters));
  CHECK(std::is_sorted(a.history.begin(), a.history.end()));
  CHECK(objective(s, a.best_placement) == a.best_objective);
}

TEST_CASE("PSO: resting particle at the optimum, determinism, accounting") {
  const Scenario s = caption_scenario(2, 5);
  const SolverResult best = solve_exhaustive(s, ExhaustiveConfig{});
  PsoConfig cfg;
  cfg.particles = 1;
  cfg.max_iters = 20;
  const std::vector<Placement> seeded{best.best_placement};
  const SolverResult r = solve_pso(s, cfg, 3, seeded);
  CHECK(std::all_of(r.history.begin(), r.history.end(), [&](int h) { return h == best.best_objective; }));

  const PsoConfig defaults;
  CHECK(props::same_result(solve_pso(s, defaults, 11), solve_pso(s, defaults, 11)));
  const SolverResult d = solve_pso(s, defaults, 11);
  CHECK(d.evaluations == std::uint64_t(defaults.particles) * (1 + defaults.max_iters));
  CHECK(std::is_sorted(d.history.begin(), d.history.end()));
}

TEST_CASE("ACO: forced selection when M = N") {
  ScenarioGenConfig gen;
  gen.fleet = std::vector<LapSpec>(4);
  const Scenario s = generate_scenario(gen, 8);
  AcoConfig cfg;
  cfg.spacing = 1000;  // 2x2 grid
  cfg.ants = 3;
  cfg.max_iters = 4;
  const SolverResult r = solve_aco(s, cfg, 1);
  const auto grid = build_candidate_grid(s.region, 1000, 200);
  Placement all(3, 4);
  all = grid.cells;
  CHECK(r.best_objective == objective(s, all));
  CHECK(r.evaluations == 12u);

  cfg.spacing = 1500;  // 1 cell for 4 LAPs
  CHECK_THROWS_AS(solve_aco(s, cfg, 1), Error);
}

TEST_CASE("ACO: washed-out pheromone leaves selection proportional to the heuristic") {
  const Eigen::VectorXd eta = (Eigen::VectorXd(4) << 1, 3, 5, 11).finished();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  const Eigen::VectorXd w = aco::selection_weights(zero, eta, 1.0, 1.0);
  CHECK((w / w.sum() - eta / eta.sum()).cwiseAbs().maxCoeff() < 1e-15);

  // evaporation = 1 on a world where nothing can be captured keeps every trail at 0
  Scenario s = caption_scenario(1, 2);
  s.fleet[0].tx_power_dbm = -200;
  AcoConfig cfg;
  cfg.evaporation = 1.0;
  cfg.max_iters = 5;
  const SolverResult r = solve_aco(s, cfg, 4);
  CHECK(r.best_objective == 0);
  CHECK(r.evaluations == std::uint64_t(cfg.ants) * cfg.max_iters);

  const auto grid = build_candidate_grid(s.region, cfg.spacing, 200);
  const Eigen::VectorXd h = aco::density_heuristic(s, grid);
  CHECK(h.minCoeff() >= 1.0);
  CHECK(h.sum() > grid.size());
}

TEST_CASE("random search") {
  const Scenario s = caption_scenario(1, 4);
  const SolverResult one = solve_random(s, RandomConfig{1}, 9);
  CHECK(one.evaluations == 1u);
  CHECK(one.best_objective == objective(s, one.best_placement));
  CHECK(props::same_result(solve_random(s, RandomConfig{50}, 9), solve_random(s, RandomConfig{50}, 9)));
}

TEST_CASE("random search with many samples approaches the optimum of a tiny problem") {
  // 2x2-grid-sized world: one LAP, 20 UEs spread out
  ScenarioGenConfig gen;
  gen.region.side = 800;
  gen.macro.pos = {400, 400, 30};
  gen.hotspot = {Point3(400, 400, 0), 100, 0.5};
  gen.num_ues = 20;
  gen.fleet = {LapSpec{}};
  const Scenario s = generate_scenario(gen, 12);
  const int grid_opt = solve_exhaustive(s, ExhaustiveConfig{400}).best_objective;
  int reached = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    if (solve_random(s, RandomConfig{1000}, seed).best_objective >= grid_opt) ++reached;
  }
  CHECK(reached >= 9);
}

TEST_CASE("solver config validation") {
  CHECK_THROWS_AS(validate(GaConfig{0}), Error);
  GaConfig g;
  g.mutation_rate = 1.5;
  CHECK_THROWS_AS(validate(g), Error);
  AcoConfig a;
  a.evaporation = 0.0;
  CHECK_THROWS_AS(validate(a), Error);
  CHECK_THROWS_AS(validate(RandomConfig{0}), Error);
  CHECK_NOTHROW(validate(SolverConfig{PsoConfig{}}));
  CHECK(solver_name(AcoConfig{}) == "aco");
}

TEST_CASE("solvers handle an empty fleet") {
  Scenario s = caption_scenario(0, 1);
  for (int k = 0; k < 5; ++k) {
    std::mt19937_64 rng(k);
    const SolverResult r = solve(s, props::random_solver_config(rng, k, s.region.side), 1);
    CHECK(r.best_objective == 0);
    CHECK(r.best_placement.cols() == 0);
  }
}
