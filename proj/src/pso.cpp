#include <vector>

#include "solver_common.hpp"

namespace airson {

// Global-best topology with synchronous updates: every particle moves using
// the gbest of the previous iteration, then pbest/gbest are refreshed.
// Particles start at rest.
SolverResult solve_pso(const Scenario& s, const PsoConfig& cfg, std::uint64_t seed,
                       std::span<const Placement> initial) {
  validate(SolverConfig{cfg});
  detail::Stopwatch clock;
  Rng rng = make_rng(seed, stream::kSolver);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int dim = 2 * s.num_laps();
  const int np = cfg.particles;
  const double vmax = cfg.vmax_fraction * s.region.side;

  Eigen::MatrixXd x(dim, np);
  for (int p = 0; p < np; ++p) {
    if (static_cast<std::size_t>(p) < initial.size()) {
      validate_placement(s, initial[p]);
      x.col(p) = xy_from_placement(initial[p]);
    } else {
      x.col(p) = detail::uniform_xy(s, rng);
    }
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, np);
  Eigen::MatrixXd pbest = x;
  std::vector<int> pbest_fit(np);
  for (int p = 0; p < np; ++p) pbest_fit[p] = detail::evaluate_xy(s, x.col(p));

  int g = 0;
  for (int p = 1; p < np; ++p) {
    if (pbest_fit[p] > pbest_fit[g]) g = p;
  }
  Eigen::VectorXd gbest = pbest.col(g);
  int gbest_fit = pbest_fit[g];

  SolverResult r;
  r.solver = "pso";
  r.seed = seed;
  r.evaluations = static_cast<std::uint64_t>(np);
  r.history.reserve(static_cast<std::size_t>(cfg.max_iters));

  Eigen::ArrayXd r1(dim), r2(dim);
  std::vector<int> fit(np);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    for (int p = 0; p < np; ++p) {
      for (int d = 0; d < dim; ++d) r1[d] = unit(rng);
      for (int d = 0; d < dim; ++d) r2[d] = unit(rng);
      v.col(p) = (cfg.inertia * v.col(p).array() +
                  cfg.c1 * r1 * (pbest.col(p) - x.col(p)).array() +
                  cfg.c2 * r2 * (gbest - x.col(p)).array())
                     .cwiseMax(-vmax)
                     .cwiseMin(vmax)
                     .matrix();
      x.col(p) += v.col(p);
      detail::clamp_to_region(s, x.col(p));
    }
    for (int p = 0; p < np; ++p) fit[p] = detail::evaluate_xy(s, x.col(p));
    r.evaluations += static_cast<std::uint64_t>(np);

    for (int p = 0; p < np; ++p) {
      if (fit[p] > pbest_fit[p]) {
        pbest_fit[p] = fit[p];
        pbest.col(p) = x.col(p);
      }
      if (pbest_fit[p] > gbest_fit) {
        gbest_fit = pbest_fit[p];
        gbest = pbest.col(p);
      }
    }
    r.history.push_back(gbest_fit);
  }

  r.best_placement = placement_from_xy(s, gbest);
  r.best_objective = gbest_fit;
  r.wall_time_s = clock.seconds();
  return r;
}

}  // namespace airson
