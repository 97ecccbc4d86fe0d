#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "airson/error.hpp"

namespace airson {

enum class PathlossKind { LogDistance, AtgLos };

/// Elevation-dependent line-of-sight mixture parameters. Defaults are the
/// commonly used urban values.
struct AtgParams {
  double a = 9.61;
  double b = 0.16;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;

  bool operator==(const AtgParams&) const = default;
};

struct RadioModelConfig {
  double frequency_hz = 2.0e9;
  PathlossKind kind = PathlossKind::LogDistance;
  double min_serving_rss_dbm = -95.0;
  std::optional<AtgParams> atg;

  /// Throws InvalidConfig when an invariant is broken.
  void validate() const;

  AtgParams atg_or_default() const { return atg.value_or(AtgParams{}); }

  bool operator==(const RadioModelConfig&) const = default;
};

std::string to_string(PathlossKind kind);
PathlossKind pathloss_kind_from_string(const std::string& name);

inline constexpr double kSpeedOfLight = 299792458.0;
/// Distances below this are rejected rather than clamped.
inline constexpr double kMinDistance = 1.0;

/// Free-space loss at the 1 m reference distance.
template <typename Scalar>
Scalar reference_loss_db(Scalar frequency_hz) {
  using std::log10;
  return Scalar(20) * log10(Scalar(4) * std::numbers::pi_v<Scalar> * frequency_hz /
                            Scalar(kSpeedOfLight));
}

template <typename Scalar>
Scalar free_space_loss_db(Scalar distance_m, Scalar frequency_hz) {
  using std::log10;
  return reference_loss_db(frequency_hz) + Scalar(20) * log10(distance_m);
}

/// Probability of line of sight at elevation angle theta (degrees).
template <typename Scalar>
Scalar los_probability(const AtgParams& p, Scalar elevation_deg) {
  using std::exp;
  return Scalar(1) / (Scalar(1) + Scalar(p.a) * exp(-Scalar(p.b) * (elevation_deg - Scalar(p.a))));
}

template <typename Scalar>
Scalar elevation_deg(const Eigen::Matrix<Scalar, 3, 1>& tx, const Eigen::Matrix<Scalar, 3, 1>& rx) {
  using std::atan2;
  const Scalar ground = (tx.template head<2>() - rx.template head<2>()).norm();
  return atan2(tx.z() - rx.z(), ground) * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Scalar>
Scalar pathloss_db(const RadioModelConfig& cfg, Scalar exponent,
                   const Eigen::Matrix<Scalar, 3, 1>& tx, const Eigen::Matrix<Scalar, 3, 1>& rx) {
  using std::log10;
  const Scalar d = (tx - rx).norm();
  if (!(d >= Scalar(kMinDistance))) {
    throw Error(ErrorKind::DegenerateDistance,
                "transmitter-receiver distance " + std::to_string(double(d)) + " m is below 1 m");
  }
  const Scalar f = Scalar(cfg.frequency_hz);
  if (cfg.kind == PathlossKind::LogDistance) {
    return reference_loss_db(f) + Scalar(10) * exponent * log10(d);
  }
  const AtgParams p = cfg.atg_or_default();
  const Scalar plos = los_probability(p, elevation_deg(tx, rx));
  return free_space_loss_db(d, f) + Scalar(p.eta_los_db) * plos +
         Scalar(p.eta_nlos_db) * (Scalar(1) - plos);
}

template <typename Scalar>
constexpr Scalar rss_dbm(Scalar tx_power_dbm, Scalar tx_gain_dbi, Scalar pathloss) {
  return tx_power_dbm + tx_gain_dbi - pathloss;
}

}  // namespace airson
