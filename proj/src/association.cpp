#include "airson/association.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace airson {

Association associate(const Scenario& s, const RssMatrix& m) {
  const int laps = s.num_laps();
  const int ues = s.num_ues();
  if (m.rows() != laps + 1 || m.cols() != ues) {
    throw Error(ErrorKind::DimensionMismatch,
                "RSS matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ", expected " + std::to_string(laps + 1) + "x" + std::to_string(ues));
  }
  const double threshold = s.radio.min_serving_rss_dbm;

  Association a(static_cast<std::size_t>(ues), Server::macro());
  for (int u = 0; u < ues; ++u) {
    // Strict '>' against the running best keeps the macrocell (row 0) and then
    // the lowest LAP index on ties.
    int best_row = 0;
    for (int r = 1; r <= laps; ++r) {
      if (m(r, u) > m(best_row, u)) best_row = r;
    }
    if (m(best_row, u) < threshold) {
      a[u] = Server::none();
    } else if (best_row > 0) {
      a[u] = Server::by_lap(best_row - 1);
    }
  }

  for (int n = 0; n < laps; ++n) {
    const auto& cap = s.fleet[n].capacity;
    if (!cap) continue;
    std::vector<int> mine;
    for (int u = 0; u < ues; ++u) {
      if (a[u] == Server::by_lap(n)) mine.push_back(u);
    }
    if (static_cast<int>(mine.size()) <= *cap) continue;
    std::stable_sort(mine.begin(), mine.end(),
                     [&](int lhs, int rhs) { return m(n + 1, lhs) > m(n + 1, rhs); });
    for (std::size_t k = static_cast<std::size_t>(*cap); k < mine.size(); ++k) {
      const int u = mine[k];
      a[u] = m(0, u) >= threshold ? Server::macro() : Server::none();
    }
  }
  return a;
}

int captured_count(const Association& a) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](const Server& srv) {
    return srv.kind == ServerKind::Lap;
  }));
}

std::vector<int> lap_loads(const Association& a, int num_laps) {
  std::vector<int> loads(static_cast<std::size_t>(num_laps), 0);
  for (const Server& srv : a) {
    if (srv.kind == ServerKind::Lap) ++loads.at(static_cast<std::size_t>(srv.lap));
  }
  return loads;
}

int objective(const Scenario& s, const Placement& p) {
  return captured_count(associate(s, compute_rss_matrix(s, p)));
}

Placement placement_from_xy(const Scenario& s, const Eigen::Ref<const Eigen::VectorXd>& xy) {
  if (xy.size() != 2 * s.num_laps()) {
    throw Error(ErrorKind::DimensionMismatch, "chromosome length must be 2N");
  }
  Placement p(3, s.num_laps());
  for (int n = 0; n < s.num_laps(); ++n) {
    p.col(n) << xy[2 * n], xy[2 * n + 1], s.fleet[n].altitude_m;
  }
  return p;
}

Eigen::VectorXd xy_from_placement(const Placement& p) {
  Eigen::VectorXd xy(2 * p.cols());
  for (Eigen::Index n = 0; n < p.cols(); ++n) {
    xy[2 * n] = p(0, n);
    xy[2 * n + 1] = p(1, n);
  }
  return xy;
}

void validate_placement(const Scenario& s, const Placement& p) {
  if (p.cols() != s.num_laps()) {
    throw Error(ErrorKind::DimensionMismatch, "placement width does not match the fleet");
  }
  for (Eigen::Index n = 0; n < p.cols(); ++n) {
    const Point3 pos = p.col(n);
    if (!pos.allFinite() || !s.region.contains(pos) || pos.z() < 0.0) {
      throw Error(ErrorKind::InvalidConfig,
                  "LAP " + std::to_string(n) + " is outside the region footprint");
    }
  }
}

}  // namespace airson
