#pragma once

#include <Eigen/Core>

#include "airson/radio_model.hpp"
#include "airson/scenario.hpp"

namespace airson {

/// LAP positions, one column per platform, in fleet order.
using Placement = Eigen::Matrix3Xd;

/// (N + 1) x U received power in dBm. Row 0 is the macrocell, row n is LAP n.
using RssMatrix = Eigen::MatrixXd;

double lap_pathloss_db(const RadioModelConfig& cfg, const LapSpec& lap, const Point3& tx,
                       const Point3& rx);

/// RSS row of one LAP of the given spec hovering at `pos` towards every UE.
Eigen::RowVectorXd lap_rss_row(const Scenario& s, const LapSpec& lap, const Point3& pos);
Eigen::RowVectorXd macro_rss_row(const Scenario& s);

/// Throws DimensionMismatch when the placement width differs from the fleet.
RssMatrix compute_rss_matrix(const Scenario& s, const Placement& p);

}  // namespace airson
