#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "airson/radio_model.hpp"

namespace airson {

/// Metres; z is height above ground.
using Point3 = Eigen::Vector3d;

/// Axis-aligned square [0, side] x [0, side].
struct Region {
  double side = 2000.0;

  bool contains(const Point3& p) const {
    return p.x() >= 0.0 && p.x() <= side && p.y() >= 0.0 && p.y() <= side;
  }
  Point3 center() const { return {side / 2, side / 2, 0.0}; }

  bool operator==(const Region&) const = default;
};

struct Macrocell {
  Point3 pos{1000.0, 1000.0, 30.0};
  double tx_power_dbm = 43.0;
  double antenna_gain_dbi = 0.0;
  double pathloss_exponent = 3.5;

  bool operator==(const Macrocell&) const = default;
};

/// Low-altitude platform parameters. Altitude is fixed per platform and is
/// not a placement decision variable.
struct LapSpec {
  double altitude_m = 200.0;
  double tx_power_dbm = 30.0;
  double antenna_gain_dbi = 0.0;
  double pathloss_exponent = 3.5;
  /// nullopt means unbounded.
  std::optional<int> capacity;
  /// nullopt: not given (look the platform up in a catalog); +inf: unbounded.
  std::optional<double> endurance_hours;
  std::optional<std::string> platform_name;

  bool operator==(const LapSpec&) const = default;
};

struct HotspotConfig {
  Point3 center{1600.0, 1600.0, 0.0};
  double radius_m = 250.0;
  double fraction = 1.0 / 3.0;

  bool operator==(const HotspotConfig&) const = default;
};

struct Ue {
  int id = 1;  // 1-based, contiguous
  Point3 pos = Point3::Zero();
  bool in_hotspot = false;

  bool operator==(const Ue&) const = default;
};

struct Scenario {
  Region region;
  Macrocell macro;
  std::vector<Ue> ues;
  std::vector<LapSpec> fleet;
  RadioModelConfig radio;
  HotspotConfig hotspot;

  int num_ues() const { return static_cast<int>(ues.size()); }
  int num_laps() const { return static_cast<int>(fleet.size()); }

  /// Copy with the fleet replaced; UEs and radio are shared by value.
  Scenario with_fleet(std::vector<LapSpec> fleet) const;

  /// Throws Schema on a broken invariant.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

struct ScenarioGenConfig {
  Region region;
  Macrocell macro;
  HotspotConfig hotspot;
  int num_ues = 150;
  std::vector<LapSpec> fleet = std::vector<LapSpec>(3);
  RadioModelConfig radio;

  /// Throws InvalidConfig, InvalidFraction or HotspotOutsideRegion.
  void validate() const;
};

/// round(fraction * U) UEs uniform in the hotspot disk, the rest uniform in the
/// region. Hotspot UEs come first in id order.
Scenario generate_scenario(const ScenarioGenConfig& cfg, std::uint64_t seed);

int hotspot_ue_count(int num_ues, double fraction);

void save_scenario(const Scenario& s, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace airson
