#include <algorithm>
#include <cmath>
#include <vector>

#include "solver_common.hpp"

namespace airson {

namespace aco {

Eigen::VectorXd density_heuristic(const Scenario& s, const CandidateGrid& grid) {
  Eigen::VectorXd eta = Eigen::VectorXd::Ones(grid.size());
  for (int c = 0; c < grid.size(); ++c) {
    const Eigen::Vector2d centre = grid.cells.col(c).head<2>();
    for (const Ue& ue : s.ues) {
      if ((ue.pos.head<2>() - centre).norm() <= grid.spacing) eta[c] += 1.0;
    }
  }
  return eta;
}

Eigen::VectorXd selection_weights(const Eigen::VectorXd& tau, const Eigen::VectorXd& eta,
                                  double pher_exp, double heur_exp) {
  Eigen::VectorXd w = tau.array().pow(pher_exp) * eta.array().pow(heur_exp);
  // Fully evaporated trails carry no information; fall back to the heuristic.
  if (!(w.sum() > 0.0) || !w.allFinite()) w = eta.array().pow(heur_exp);
  return w;
}

}  // namespace aco

SolverResult solve_aco(const Scenario& s, const AcoConfig& cfg, std::uint64_t seed) {
  validate(SolverConfig{cfg});
  detail::Stopwatch clock;
  Rng rng = make_rng(seed, stream::kSolver);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double altitude = s.fleet.empty() ? LapSpec{}.altitude_m : s.fleet.front().altitude_m;
  const CandidateGrid grid = build_candidate_grid(s.region, cfg.spacing, altitude);
  const int n_laps = s.num_laps();
  const int n_cells = grid.size();
  if (n_cells < n_laps) {
    throw Error(ErrorKind::SpacingTooLarge, "ACO grid has " + std::to_string(n_cells) +
                                                " cells for " + std::to_string(n_laps) + " LAPs");
  }

  const Eigen::VectorXd eta = aco::density_heuristic(s, grid);
  Eigen::VectorXd tau = Eigen::VectorXd::Ones(n_cells);

  auto to_placement = [&](const std::vector<int>& cells) {
    Placement p(3, n_laps);
    for (int i = 0; i < n_laps; ++i) {
      p.col(i) << grid.cells(0, cells[i]), grid.cells(1, cells[i]), s.fleet[i].altitude_m;
    }
    return p;
  };

  SolverResult r;
  r.solver = "aco";
  r.seed = seed;
  r.best_objective = -1;
  r.history.reserve(static_cast<std::size_t>(cfg.max_iters));

  std::vector<int> chosen;
  std::vector<int> iter_best_cells;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const Eigen::VectorXd base = aco::selection_weights(tau, eta, cfg.pher_exp, cfg.heur_exp);
    int iter_best = -1;
    for (int ant = 0; ant < cfg.ants; ++ant) {
      // Roulette-wheel sampling without replacement.
      Eigen::VectorXd w = base;
      chosen.clear();
      for (int k = 0; k < n_laps; ++k) {
        const double total = w.sum();
        int pick = -1;
        if (total > 0.0) {
          double target = unit(rng) * total;
          for (int c = 0; c < n_cells; ++c) {
            if (w[c] <= 0.0) continue;
            pick = c;
            target -= w[c];
            if (target < 0.0) break;
          }
        } else {
          // zero-weight leftovers: take the lowest free index
          for (int c = 0; c < n_cells && pick < 0; ++c) {
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) pick = c;
          }
        }
        chosen.push_back(pick);
        w[pick] = 0.0;
      }
      std::sort(chosen.begin(), chosen.end());
      const Placement p = to_placement(chosen);
      const int value = objective(s, p);
      ++r.evaluations;
      if (value > iter_best) {
        iter_best = value;
        iter_best_cells = chosen;
      }
      if (value > r.best_objective) {
        r.best_objective = value;
        r.best_placement = p;
      }
    }
    tau *= (1.0 - cfg.evaporation);
    const double deposit = s.num_ues() > 0 ? double(iter_best) / s.num_ues() : 0.0;
    for (int c : iter_best_cells) tau[c] += deposit;
    r.history.push_back(r.best_objective);
  }

  r.wall_time_s = clock.seconds();
  return r;
}

}  // namespace airson
