#pragma once

// Random instance generators shared by the property tests and the acceptance
// suite.

#include <cstdint>
#include <random>
#include <vector>

#include "airson/association.hpp"
#include "airson/scenario.hpp"
#include "oracle/brute_force.hpp"

namespace testgen {

using airson::LapSpec;
using airson::Placement;
using airson::Scenario;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline LapSpec random_lap(std::mt19937_64& rng, bool bounded_capacity) {
  LapSpec lap;
  lap.altitude_m = uniform(rng, 20.0, 300.0);
  lap.tx_power_dbm = uniform(rng, 15.0, 35.0);
  lap.antenna_gain_dbi = uniform(rng, 0.0, 3.0);
  lap.pathloss_exponent = uniform(rng, 2.0, 4.0);
  if (bounded_capacity && uniform(rng, 0.0, 1.0) < 0.5) lap.capacity = uniform_int(rng, 1, 8);
  return lap;
}

/// Small scenario with U UEs scattered over a random region.
inline Scenario random_scenario(std::mt19937_64& rng, int num_ues, int num_laps,
                                bool bounded_capacity = true) {
  Scenario s;
  s.region.side = uniform(rng, 400.0, 2000.0);
  s.macro.pos = {uniform(rng, 0.0, s.region.side), uniform(rng, 0.0, s.region.side),
                 uniform(rng, 10.0, 40.0)};
  s.macro.tx_power_dbm = uniform(rng, 35.0, 46.0);
  s.macro.pathloss_exponent = uniform(rng, 2.5, 4.0);
  s.radio.min_serving_rss_dbm = uniform(rng, 0.0, 1.0) < 0.5 ? -95.0 : -200.0;
  for (int u = 0; u < num_ues; ++u) {
    airson::Ue ue;
    ue.id = u + 1;
    ue.pos = {uniform(rng, 0.0, s.region.side), uniform(rng, 0.0, s.region.side), 0.0};
    s.ues.push_back(ue);
  }
  for (int n = 0; n < num_laps; ++n) s.fleet.push_back(random_lap(rng, bounded_capacity));
  return s;
}

inline Placement random_placement(std::mt19937_64& rng, const Scenario& s) {
  Placement p(3, s.num_laps());
  for (int n = 0; n < s.num_laps(); ++n) {
    p.col(n) << uniform(rng, 0.0, s.region.side), uniform(rng, 0.0, s.region.side),
        s.fleet[n].altitude_m;
  }
  return p;
}

/// Oracle view of a scenario: copies the numbers out, nothing else.
inline oracle::World oracle_world(const Scenario& s) {
  oracle::World w;
  w.frequency_hz = s.radio.frequency_hz;
  w.threshold_dbm = s.radio.min_serving_rss_dbm;
  w.macro = {s.macro.pos.x(), s.macro.pos.y(), s.macro.pos.z(), s.macro.tx_power_dbm,
             s.macro.antenna_gain_dbi, s.macro.pathloss_exponent, std::nullopt};
  for (const auto& ue : s.ues) {
    w.ue_x.push_back(ue.pos.x());
    w.ue_y.push_back(ue.pos.y());
  }
  return w;
}

inline std::vector<oracle::Tx> oracle_fleet(const Scenario& s) {
  std::vector<oracle::Tx> fleet;
  for (const auto& lap : s.fleet) {
    fleet.push_back({0.0, 0.0, lap.altitude_m, lap.tx_power_dbm, lap.antenna_gain_dbi,
                     lap.pathloss_exponent, lap.capacity});
  }
  return fleet;
}

/// Grid cell centres computed from scratch: ((i + 1/2) s, (j + 1/2) s).
inline std::vector<std::pair<double, double>> oracle_cells(double side, double spacing) {
  std::vector<std::pair<double, double>> cells;
  const int k = static_cast<int>(side / spacing + 1e-9);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) cells.emplace_back((i + 0.5) * spacing, (j + 0.5) * spacing);
  }
  return cells;
}

}  // namespace testgen
