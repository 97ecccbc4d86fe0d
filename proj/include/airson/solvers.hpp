#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "airson/association.hpp"
#include "airson/scenario.hpp"

namespace airson {

/// Cell centres at ((i + 1/2) s, (j + 1/2) s), row-major with x varying fastest.
struct CandidateGrid {
  double spacing = 0.0;
  int per_side = 0;
  Eigen::Matrix3Xd cells;

  int size() const { return static_cast<int>(cells.cols()); }
};

/// Throws SpacingTooLarge when no cell fits, InvalidConfig when spacing <= 0.
CandidateGrid build_candidate_grid(const Region& region, double spacing, double altitude);

struct ExhaustiveConfig {
  double spacing = 400.0;
  std::uint64_t budget = 2'000'000;  // max combinations evaluated
};

struct GaConfig {
  int population = 40;
  int max_iters = 200;
  double crossover_rate = 0.9;
  double mutation_rate = 0.1;
  double mutation_sigma_fraction = 0.1;
  int tournament_size = 3;
};

struct PsoConfig {
  int particles = 30;
  int max_iters = 200;
  double inertia = 0.729;
  double c1 = 1.49445;
  double c2 = 1.49445;
  double vmax_fraction = 0.2;
};

struct AcoConfig {
  int ants = 20;
  int max_iters = 50;
  double evaporation = 0.1;
  double pher_exp = 1.0;
  double heur_exp = 1.0;
  double spacing = 400.0;
};

struct RandomConfig {
  int samples = 1000;
};

using SolverConfig = std::variant<ExhaustiveConfig, GaConfig, PsoConfig, AcoConfig, RandomConfig>;

/// Throws InvalidConfig on counts < 1, rates outside [0, 1], etc.
void validate(const SolverConfig& cfg);
std::string solver_name(const SolverConfig& cfg);

struct SolverResult {
  std::string solver;
  Placement best_placement;
  int best_objective = 0;
  std::vector<int> history;  // best-so-far per iteration
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Every unordered N-subset of grid cells; LAP i of the fleet goes to the i-th
/// smallest cell index. Ties keep the lexicographically smallest subset.
/// Throws BudgetExceeded when C(M, N) > budget.
SolverResult solve_exhaustive(const Scenario& s, const CandidateGrid& grid, std::uint64_t budget);
SolverResult solve_exhaustive(const Scenario& s, const ExhaustiveConfig& cfg);

/// `initial` placements fill the first population slots / particles; the rest
/// are drawn uniformly over the region.
SolverResult solve_ga(const Scenario& s, const GaConfig& cfg, std::uint64_t seed,
                      std::span<const Placement> initial = {});
SolverResult solve_pso(const Scenario& s, const PsoConfig& cfg, std::uint64_t seed,
                       std::span<const Placement> initial = {});
SolverResult solve_aco(const Scenario& s, const AcoConfig& cfg, std::uint64_t seed);
SolverResult solve_random(const Scenario& s, const RandomConfig& cfg, std::uint64_t seed);

SolverResult solve(const Scenario& s, const SolverConfig& cfg, std::uint64_t seed);

namespace aco {
/// 1 + number of UEs within one grid spacing (ground distance) of each cell.
Eigen::VectorXd density_heuristic(const Scenario& s, const CandidateGrid& grid);
/// tau^pher_exp * eta^heur_exp, or eta^heur_exp alone once every trail has
/// evaporated to zero.
Eigen::VectorXd selection_weights(const Eigen::VectorXd& tau, const Eigen::VectorXd& eta,
                                  double pher_exp, double heur_exp);
}  // namespace aco

}  // namespace airson
