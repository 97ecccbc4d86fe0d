#pragma once

#include <vector>

#include <Eigen/Core>

#include "airson/radio.hpp"
#include "airson/scenario.hpp"

namespace airson {

enum class ServerKind { None, Macro, Lap };

struct Server {
  ServerKind kind = ServerKind::Macro;
  int lap = -1;  // 0-based column of the placement when kind == Lap

  static constexpr Server none() { return {ServerKind::None, -1}; }
  static constexpr Server macro() { return {ServerKind::Macro, -1}; }
  static constexpr Server by_lap(int n) { return {ServerKind::Lap, n}; }

  bool operator==(const Server&) const = default;
};

/// One serving tag per UE, indexed like Scenario::ues.
using Association = std::vector<Server>;

/// Best-server rule. The macrocell wins ties, then the lowest LAP index; a UE
/// whose best RSS is below the serving threshold is unserved; a LAP with bounded
/// capacity K keeps its K strongest UEs and the overflow falls back to the
/// macrocell when the macrocell clears the threshold.
Association associate(const Scenario& s, const RssMatrix& m);

int captured_count(const Association& a);

/// UEs captured by each LAP (length = number of placement columns).
std::vector<int> lap_loads(const Association& a, int num_laps);

/// Number of UEs captured by the LAP layer; the fitness of every solver.
int objective(const Scenario& s, const Placement& p);

/// Places LAP n at (xy[2n], xy[2n+1]) and the fleet altitude.
Placement placement_from_xy(const Scenario& s, const Eigen::Ref<const Eigen::VectorXd>& xy);
Eigen::VectorXd xy_from_placement(const Placement& p);

/// Throws DimensionMismatch or InvalidConfig.
void validate_placement(const Scenario& s, const Placement& p);

}  // namespace airson
