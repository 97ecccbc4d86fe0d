#include "airson/radio.hpp"

#include <cmath>

namespace airson {

void RadioModelConfig::validate() const {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    throw Error(ErrorKind::InvalidConfig, "frequency must be > 0");
  }
  if (!std::isfinite(min_serving_rss_dbm)) {
    throw Error(ErrorKind::InvalidConfig, "min serving RSS must be finite");
  }
  if (kind == PathlossKind::AtgLos) {
    const AtgParams p = atg_or_default();
    if (!(p.a > 0.0) || !(p.b > 0.0)) {
      throw Error(ErrorKind::InvalidConfig, "ATG parameters a and b must be > 0");
    }
  }
}

std::string to_string(PathlossKind kind) {
  return kind == PathlossKind::LogDistance ? "LOG_DISTANCE" : "ATG_LOS";
}

PathlossKind pathloss_kind_from_string(const std::string& name) {
  if (name == "LOG_DISTANCE") return PathlossKind::LogDistance;
  if (name == "ATG_LOS") return PathlossKind::AtgLos;
  throw Error(ErrorKind::Schema, "unknown radio model '" + name + "'");
}

double lap_pathloss_db(const RadioModelConfig& cfg, const LapSpec& lap, const Point3& tx,
                       const Point3& rx) {
  return pathloss_db(cfg, lap.pathloss_exponent, tx, rx);
}

Eigen::RowVectorXd lap_rss_row(const Scenario& s, const LapSpec& lap, const Point3& pos) {
  Eigen::RowVectorXd row(s.num_ues());
  for (int u = 0; u < s.num_ues(); ++u) {
    const double pl = pathloss_db(s.radio, lap.pathloss_exponent, pos, s.ues[u].pos);
    row[u] = rss_dbm(lap.tx_power_dbm, lap.antenna_gain_dbi, pl);
  }
  return row;
}

Eigen::RowVectorXd macro_rss_row(const Scenario& s) {
  // The macrocell always follows the log-distance law with its own exponent.
  RadioModelConfig macro_cfg = s.radio;
  macro_cfg.kind = PathlossKind::LogDistance;
  Eigen::RowVectorXd row(s.num_ues());
  for (int u = 0; u < s.num_ues(); ++u) {
    const double pl = pathloss_db(macro_cfg, s.macro.pathloss_exponent, s.macro.pos, s.ues[u].pos);
    row[u] = rss_dbm(s.macro.tx_power_dbm, s.macro.antenna_gain_dbi, pl);
  }
  return row;
}

RssMatrix compute_rss_matrix(const Scenario& s, const Placement& p) {
  if (p.cols() != s.num_laps()) {
    throw Error(ErrorKind::DimensionMismatch,
                "placement has " + std::to_string(p.cols()) + " positions for a fleet of " +
                    std::to_string(s.num_laps()));
  }
  RssMatrix m(p.cols() + 1, s.num_ues());
  m.row(0) = macro_rss_row(s);
  for (Eigen::Index n = 0; n < p.cols(); ++n) {
    m.row(n + 1) = lap_rss_row(s, s.fleet[n], p.col(n));
  }
  return m;
}

}  // namespace airson
