#include <algorithm>
#include <numeric>
#include <vector>

#include "solver_common.hpp"

namespace airson {

namespace {

struct Individual {
  Eigen::VectorXd genes;
  int fitness = 0;
};

// Best of `size` uniform draws with replacement; the earliest draw wins ties.
const Individual& tournament(const std::vector<Individual>& pop, int size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
  const Individual* best = &pop[pick(rng)];
  for (int k = 1; k < size; ++k) {
    const Individual* cand = &pop[pick(rng)];
    if (cand->fitness > best->fitness) best = cand;
  }
  return *best;
}

}  // namespace

SolverResult solve_ga(const Scenario& s, const GaConfig& cfg, std::uint64_t seed,
                      std::span<const Placement> initial) {
  validate(SolverConfig{cfg});
  detail::Stopwatch clock;
  Rng rng = make_rng(seed, stream::kSolver);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, cfg.mutation_sigma_fraction * s.region.side);

  const auto pop_size = static_cast<std::size_t>(cfg.population);
  std::vector<Individual> pop;
  pop.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    Individual ind;
    if (i < initial.size()) {
      validate_placement(s, initial[i]);
      ind.genes = xy_from_placement(initial[i]);
    } else {
      ind.genes = detail::uniform_xy(s, rng);
    }
    pop.push_back(std::move(ind));
  }
  for (auto& ind : pop) ind.fitness = detail::evaluate_xy(s, ind.genes);

  SolverResult r;
  r.solver = "ga";
  r.seed = seed;
  r.evaluations = pop_size;
  r.history.reserve(static_cast<std::size_t>(cfg.max_iters));

  std::vector<Individual> offspring;
  offspring.reserve(pop_size + 1);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    offspring.clear();
    while (offspring.size() < pop_size) {
      Individual a = tournament(pop, cfg.tournament_size, rng);
      Individual b = tournament(pop, cfg.tournament_size, rng);
      if (unit(rng) < cfg.crossover_rate) {
        const double w = unit(rng);
        const Eigen::VectorXd pa = a.genes;
        a.genes = w * pa + (1.0 - w) * b.genes;
        b.genes = (1.0 - w) * pa + w * b.genes;
      }
      for (Individual* child : {&a, &b}) {
        for (Eigen::Index g = 0; g < child->genes.size(); ++g) {
          if (unit(rng) < cfg.mutation_rate) child->genes[g] += gauss(rng);
        }
        detail::clamp_to_region(s, child->genes);
      }
      offspring.push_back(std::move(a));
      if (offspring.size() < pop_size) offspring.push_back(std::move(b));
    }
    for (auto& child : offspring) child.fitness = detail::evaluate_xy(s, child.genes);
    r.evaluations += offspring.size();

    // (mu + lambda): parents precede offspring so a stable sort favours them on ties.
    pop.insert(pop.end(), std::make_move_iterator(offspring.begin()),
               std::make_move_iterator(offspring.end()));
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& x, const Individual& y) { return x.fitness > y.fitness; });
    pop.resize(pop_size);
    r.history.push_back(pop.front().fitness);
  }

  r.best_placement = placement_from_xy(s, pop.front().genes);
  r.best_objective = pop.front().fitness;
  r.wall_time_s = clock.seconds();
  return r;
}

}  // namespace airson
