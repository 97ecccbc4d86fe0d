#include "airson/solvers.hpp"

#include <cmath>
#include <limits>

namespace airson {

CandidateGrid build_candidate_grid(const Region& region, double spacing, double altitude) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw Error(ErrorKind::InvalidConfig, "grid spacing must be > 0");
  }
  // Tolerate side/spacing landing a hair under an integer.
  const int k = static_cast<int>(std::floor(region.side / spacing + 1e-9));
  if (k < 1) {
    throw Error(ErrorKind::SpacingTooLarge, "grid spacing " + std::to_string(spacing) +
                                                " exceeds region side " + std::to_string(region.side));
  }
  CandidateGrid g;
  g.spacing = spacing;
  g.per_side = k;
  g.cells.resize(3, k * k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      g.cells.col(j * k + i) << (i + 0.5) * spacing, (j + 0.5) * spacing, altitude;
    }
  }
  return g;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; guard the product.
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidConfig, msg);
}

bool is_rate(double r) { return r >= 0.0 && r <= 1.0; }

}  // namespace

void validate(const SolverConfig& cfg) {
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExhaustiveConfig>) {
          require(c.spacing > 0.0, "exhaustive: spacing must be > 0");
          require(c.budget >= 1, "exhaustive: budget must be >= 1");
        } else if constexpr (std::is_same_v<T, GaConfig>) {
          require(c.population >= 1, "ga: population must be >= 1");
          require(c.max_iters >= 1, "ga: max_iters must be >= 1");
          require(c.tournament_size >= 1, "ga: tournament_size must be >= 1");
          require(is_rate(c.crossover_rate), "ga: crossover_rate must be in [0, 1]");
          require(is_rate(c.mutation_rate), "ga: mutation_rate must be in [0, 1]");
          require(c.mutation_sigma_fraction >= 0.0, "ga: mutation_sigma_fraction must be >= 0");
        } else if constexpr (std::is_same_v<T, PsoConfig>) {
          require(c.particles >= 1, "pso: particles must be >= 1");
          require(c.max_iters >= 1, "pso: max_iters must be >= 1");
          require(std::isfinite(c.inertia) && c.c1 >= 0.0 && c.c2 >= 0.0,
                  "pso: inertia must be finite and c1, c2 >= 0");
          require(c.vmax_fraction > 0.0, "pso: vmax_fraction must be > 0");
        } else if constexpr (std::is_same_v<T, AcoConfig>) {
          require(c.ants >= 1, "aco: ants must be >= 1");
          require(c.max_iters >= 1, "aco: max_iters must be >= 1");
          require(c.evaporation > 0.0 && c.evaporation <= 1.0, "aco: evaporation must be in (0, 1]");
          require(c.pher_exp >= 0.0 && c.heur_exp >= 0.0, "aco: exponents must be >= 0");
          require(c.spacing > 0.0, "aco: spacing must be > 0");
        } else {
          require(c.samples >= 1, "random: samples must be >= 1");
        }
      },
      cfg);
}

std::string solver_name(const SolverConfig& cfg) {
  static constexpr const char* names[] = {"exhaustive", "ga", "pso", "aco", "random"};
  return names[cfg.index()];
}

}  // namespace airson
