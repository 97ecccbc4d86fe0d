#include "solver_common.hpp"

namespace airson {

SolverResult solve_random(const Scenario& s, const RandomConfig& cfg, std::uint64_t seed) {
  validate(SolverConfig{cfg});
  detail::Stopwatch clock;
  Rng rng = make_rng(seed, stream::kSolver);

  SolverResult r;
  r.solver = "random";
  r.seed = seed;
  r.best_objective = -1;
  r.history.reserve(static_cast<std::size_t>(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    const Placement p = placement_from_xy(s, detail::uniform_xy(s, rng));
    const int value = objective(s, p);
    ++r.evaluations;
    if (value > r.best_objective) {
      r.best_objective = value;
      r.best_placement = p;
    }
    r.history.push_back(r.best_objective);
  }
  r.wall_time_s = clock.seconds();
  return r;
}

}  // namespace airson
