#include <numeric>
#include <vector>

#include "solver_common.hpp"

namespace airson {

SolverResult solve_exhaustive(const Scenario& s, const CandidateGrid& grid, std::uint64_t budget) {
  detail::Stopwatch clock;
  const int n_laps = s.num_laps();
  const int n_cells = grid.size();
  if (n_cells < n_laps) {
    throw Error(ErrorKind::SpacingTooLarge, "grid has " + std::to_string(n_cells) +
                                                " cells for " + std::to_string(n_laps) + " LAPs");
  }
  const std::uint64_t combos = binomial(n_cells, n_laps);
  if (combos > budget) {
    throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n_cells) + ", " +
                                               std::to_string(n_laps) + ") = " + std::to_string(combos) +
                                               " combinations exceed the budget of " +
                                               std::to_string(budget));
  }

  // rows[i][c]: LAP i of the fleet hovering over cell c.
  std::vector<std::vector<Eigen::RowVectorXd>> rows(n_laps);
  for (int i = 0; i < n_laps; ++i) {
    rows[i].reserve(n_cells);
    for (int c = 0; c < n_cells; ++c) {
      Point3 pos = grid.cells.col(c);
      pos.z() = s.fleet[i].altitude_m;
      rows[i].push_back(lap_rss_row(s, s.fleet[i], pos));
    }
  }

  RssMatrix m(n_laps + 1, s.num_ues());
  m.row(0) = macro_rss_row(s);

  std::vector<int> idx(n_laps);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> best_idx = idx;
  int best = -1;
  std::uint64_t evaluations = 0;

  while (true) {
    for (int i = 0; i < n_laps; ++i) m.row(i + 1) = rows[i][idx[i]];
    const int value = captured_count(associate(s, m));
    ++evaluations;
    if (value > best) {
      best = value;
      best_idx = idx;
    }
    // next combination in lexicographic order
    int i = n_laps - 1;
    while (i >= 0 && idx[i] == n_cells - n_laps + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n_laps; ++j) idx[j] = idx[j - 1] + 1;
  }

  SolverResult r;
  r.solver = "exhaustive";
  r.best_placement.resize(3, n_laps);
  for (int i = 0; i < n_laps; ++i) {
    r.best_placement.col(i) << grid.cells(0, best_idx[i]), grid.cells(1, best_idx[i]),
        s.fleet[i].altitude_m;
  }
  r.best_objective = best;
  r.history = {best};
  r.evaluations = evaluations;
  r.wall_time_s = clock.seconds();
  return r;
}

SolverResult solve_exhaustive(const Scenario& s, const ExhaustiveConfig& cfg) {
  validate(SolverConfig{cfg});
  const double altitude = s.fleet.empty() ? LapSpec{}.altitude_m : s.fleet.front().altitude_m;
  return solve_exhaustive(s, build_candidate_grid(s.region, cfg.spacing, altitude), cfg.budget);
}

}  // namespace airson
