#include "airson/scenario.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "airson/error.hpp"
#include "airson/rng.hpp"

namespace airson {

namespace {

bool finite(const Point3& p) { return p.allFinite(); }

void check_lap(const LapSpec& lap, ErrorKind kind, int index) {
  const std::string where = "fleet[" + std::to_string(index) + "]: ";
  if (!(lap.altitude_m > 0.0) || !std::isfinite(lap.altitude_m)) {
    throw Error(kind, where + "altitude must be > 0");
  }
  if (!std::isfinite(lap.tx_power_dbm) || !std::isfinite(lap.antenna_gain_dbi)) {
    throw Error(kind, where + "tx power and gain must be finite");
  }
  if (!(lap.pathloss_exponent >= 2.0)) {
    throw Error(kind, where + "pathloss exponent must be >= 2");
  }
  if (lap.capacity && *lap.capacity < 1) {
    throw Error(kind, where + "capacity must be >= 1 when bounded");
  }
  if (lap.endurance_hours && !(*lap.endurance_hours > 0.0)) {
    throw Error(kind, where + "endurance must be > 0");
  }
}

void check_macro(const Macrocell& m, ErrorKind kind) {
  if (!finite(m.pos) || m.pos.z() < 0.0) {
    throw Error(kind, "macrocell position must be finite with z >= 0");
  }
  if (!std::isfinite(m.tx_power_dbm) || !std::isfinite(m.antenna_gain_dbi)) {
    throw Error(kind, "macrocell tx power and gain must be finite");
  }
  if (!(m.pathloss_exponent >= 2.0)) {
    throw Error(kind, "macrocell pathloss exponent must be >= 2");
  }
}

bool disk_inside(const Region& r, const HotspotConfig& h) {
  return h.center.x() - h.radius_m >= 0.0 && h.center.x() + h.radius_m <= r.side &&
         h.center.y() - h.radius_m >= 0.0 && h.center.y() + h.radius_m <= r.side;
}

}  // namespace

int hotspot_ue_count(int num_ues, double fraction) {
  return static_cast<int>(std::lround(fraction * num_ues));
}

Scenario Scenario::with_fleet(std::vector<LapSpec> new_fleet) const {
  Scenario copy = *this;
  copy.fleet = std::move(new_fleet);
  return copy;
}

void Scenario::validate() const {
  constexpr auto kind = ErrorKind::Schema;
  if (!(region.side > 0.0) || !std::isfinite(region.side)) {
    throw Error(kind, "region side must be > 0");
  }
  check_macro(macro, kind);
  radio.validate();
  if (ues.empty()) throw Error(kind, "scenario needs at least one UE");
  for (std::size_t i = 0; i < ues.size(); ++i) {
    const Ue& ue = ues[i];
    if (ue.id != static_cast<int>(i) + 1) {
      throw Error(kind, "UE ids must be contiguous from 1");
    }
    if (!finite(ue.pos) || ue.pos.z() != 0.0 || !region.contains(ue.pos)) {
      throw Error(kind, "UE " + std::to_string(ue.id) + " must lie on the ground inside the region");
    }
  }
  for (std::size_t i = 0; i < fleet.size(); ++i) check_lap(fleet[i], kind, static_cast<int>(i));
  if (!(hotspot.radius_m > 0.0) || !finite(hotspot.center)) {
    throw Error(kind, "hotspot radius must be > 0");
  }
  if (!(hotspot.fraction >= 0.0 && hotspot.fraction <= 1.0)) {
    throw Error(kind, "hotspot fraction must be in [0, 1]");
  }
}

void ScenarioGenConfig::validate() const {
  constexpr auto kind = ErrorKind::InvalidConfig;
  if (num_ues < 1) throw Error(kind, "U must be ≥ 1");
  if (!(region.side > 0.0) || !std::isfinite(region.side)) {
    throw Error(kind, "region side must be > 0");
  }
  if (!(hotspot.fraction >= 0.0 && hotspot.fraction <= 1.0)) {
    throw Error(ErrorKind::InvalidFraction, "hotspot fraction must be in [0, 1]");
  }
  if (!(hotspot.radius_m > 0.0)) throw Error(kind, "hotspot radius must be > 0");
  if (!disk_inside(region, hotspot)) {
    throw Error(ErrorKind::HotspotOutsideRegion, "hotspot disk must lie inside the region");
  }
  check_macro(macro, kind);
  radio.validate();
  for (std::size_t i = 0; i < fleet.size(); ++i) check_lap(fleet[i], kind, static_cast<int>(i));
}

Scenario generate_scenario(const ScenarioGenConfig& cfg, std::uint64_t seed) {
  cfg.validate();

  Rng rng = make_rng(seed, stream::kScenario);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> across(0.0, cfg.region.side);

  const int in_hotspot = hotspot_ue_count(cfg.num_ues, cfg.hotspot.fraction);

  Scenario s;
  s.region = cfg.region;
  s.macro = cfg.macro;
  s.fleet = cfg.fleet;
  s.radio = cfg.radio;
  s.hotspot = cfg.hotspot;
  s.ues.reserve(static_cast<std::size_t>(cfg.num_ues));

  for (int i = 0; i < cfg.num_ues; ++i) {
    Ue ue;
    ue.id = i + 1;
    if (i < in_hotspot) {
      // sqrt keeps the density uniform over the disk area
      const double r = cfg.hotspot.radius_m * std::sqrt(unit(rng));
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      ue.pos = {cfg.hotspot.center.x() + r * std::cos(phi),
                cfg.hotspot.center.y() + r * std::sin(phi), 0.0};
      ue.in_hotspot = true;
    } else {
      const double x = across(rng);
      const double y = across(rng);
      ue.pos = {x, y, 0.0};
    }
    s.ues.push_back(ue);
  }
  return s;
}

}  // namespace airson
