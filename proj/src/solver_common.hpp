#pragma once

#include <chrono>
#include <random>

#include <Eigen/Core>

#include "airson/association.hpp"
#include "airson/rng.hpp"
#include "airson/scenario.hpp"
#include "airson/solvers.hpp"

namespace airson::detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Eigen::VectorXd uniform_xy(const Scenario& s, Rng& rng) {
  std::uniform_real_distribution<double> across(0.0, s.region.side);
  Eigen::VectorXd xy(2 * s.num_laps());
  for (Eigen::Index i = 0; i < xy.size(); ++i) xy[i] = across(rng);
  return xy;
}

inline void clamp_to_region(const Scenario& s, Eigen::Ref<Eigen::VectorXd> xy) {
  xy = xy.cwiseMax(0.0).cwiseMin(s.region.side);
}

inline int evaluate_xy(const Scenario& s, const Eigen::Ref<const Eigen::VectorXd>& xy) {
  return objective(s, placement_from_xy(s, xy));
}

}  // namespace airson::detail
