#include "airson/solvers.hpp"

namespace airson {

SolverResult solve(const Scenario& s, const SolverConfig& cfg, std::uint64_t seed) {
  SolverResult r = std::visit(
      [&](const auto& c) -> SolverResult {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExhaustiveConfig>) return solve_exhaustive(s, c);
        else if constexpr (std::is_same_v<T, GaConfig>) return solve_ga(s, c, seed);
        else if constexpr (std::is_same_v<T, PsoConfig>) return solve_pso(s, c, seed);
        else if constexpr (std::is_same_v<T, AcoConfig>) return solve_aco(s, c, seed);
        else return solve_random(s, c, seed);
      },
      cfg);
  r.seed = seed;
  return r;
}

}  // namespace airson
