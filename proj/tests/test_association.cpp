#include <doctest.h>

#include "airson/association.hpp"

using namespace airson;

namespace {

Scenario line_scenario(int num_laps) {
  Scenario s;
  s.region.side = 2000;
  s.macro.pos = {1000, 1000, 30};
  for (int u = 0; u < 4; ++u) s.ues.push_back({u + 1, Point3(100.0 + 400 * u, 100, 0), false});
  s.fleet.assign(static_cast<std::size_t>(num_laps), LapSpec{});
  return s;
}

}  // namespace

TEST_CASE("no LAPs: every UE stays on the macrocell or is unserved") {
  Scenario s = line_scenario(0);
  s.radio.min_serving_rss_dbm = -200;
  const Association a = associate(s, compute_rss_matrix(s, Placement(3, 0)));
  for (const Server& srv : a) CHECK(srv == Server::macro());
  CHECK(captured_count(a) == 0);

  s.radio.min_serving_rss_dbm = 0;  // nobody clears it
  for (const Server& srv : associate(s, compute_rss_matrix(s, Placement(3, 0)))) CHECK(srv == Server::none());
}

TEST_CASE("UE 10 m under a LAP is captured from a macrocell 1 km away") {
  Scenario s;
  s.region.side = 2000;
  s.macro.pos = {1000, 0, 0};  // ground-level antenna so the UE sits exactly 1 km away
  s.macro.tx_power_dbm = 43;
  s.macro.pathloss_exponent = 3.5;
  s.ues.push_back({1, Point3(0, 0, 0), false});
  LapSpec lap;
  lap.altitude_m = 10;
  lap.tx_power_dbm = 40;
  lap.pathloss_exponent = 2.0;
  s.fleet = {lap};
  Placement p(3, 1);
  p << 0, 0, 10;
  const RssMatrix m = compute_rss_matrix(s, p);
  CHECK(std::abs(m(1, 0) - (-18.46)) <= 0.01);
  CHECK(std::abs(m(0, 0) - (-100.46)) <= 0.01);
  CHECK(associate(s, m)[0] == Server::by_lap(0));
}

TEST_CASE("tie-breaking") {
  Scenario s = line_scenario(2);
  s.radio.min_serving_rss_dbm = -200;
  RssMatrix m(3, 4);
  m << -70, -60, -80, -90,  // macro
      -70, -65, -75, -85,   // LAP 0
      -71, -65, -75, -85;   // LAP 1
  const Association a = associate(s, m);
  CHECK(a[0] == Server::macro());      // LAP equals macro: macro keeps it
  CHECK(a[1] == Server::macro());
  CHECK(a[2] == Server::by_lap(0));    // equal LAPs: lowest index
  CHECK(a[3] == Server::by_lap(0));
}

TEST_CASE("serving threshold and capacity fallback") {
  Scenario s = line_scenario(1);
  s.radio.min_serving_rss_dbm = -95;
  s.fleet[0].capacity = 2;
  RssMatrix m(2, 4);
  m << -90, -99, -90, -94,  // macro
      -60, -50, -96, -80;   // LAP 0
  const Association a = associate(s, m);
  // UE 2 prefers the macro; the LAP keeps its 2 strongest of UEs 0, 1, 3
  CHECK(a[2] == Server::macro());
  CHECK(a[1] == Server::by_lap(0));  // -50, strongest
  CHECK(a[0] == Server::by_lap(0));  // -60
  CHECK(a[3] == Server::macro());    // overflow, macro -94 clears -95
  CHECK(captured_count(a) == 2);

  m(0, 3) = -97;  // overflow UE whose macro signal is too weak
  CHECK(associate(s, m)[3] == Server::none());
  m(1, 3) = -96;
  m(0, 3) = -97;
  CHECK(associate(s, m)[3] == Server::none());  // best below threshold
}

TEST_CASE("captured_count") {
  CHECK(captured_count(Association(5, Server::macro())) == 0);
  CHECK(captured_count({Server::by_lap(0), Server::macro(), Server::by_lap(1)}) == 2);
  CHECK(captured_count({Server::none(), Server::by_lap(3)}) == 1);
}

TEST_CASE("lap_loads") {
  const auto loads = lap_loads({Server::by_lap(1), Server::macro(), Server::by_lap(1), Server::by_lap(0)}, 3);
  CHECK(loads == std::vector<int>{1, 2, 0});
}

TEST_CASE("objective examples") {
  SUBCASE("LAP far from everyone captures nothing") {
    Scenario s = line_scenario(1);
    s.fleet[0].tx_power_dbm = -30;
    Placement p(3, 1);
    p << 2000, 2000, 200;
    CHECK(objective(s, p) == 0);
  }
  SUBCASE("single LAP over a 50-UE hotspot with a weak macrocell captures all 50") {
    ScenarioGenConfig cfg;
    cfg.num_ues = 50;
    cfg.hotspot.fraction = 1.0;
    cfg.macro.tx_power_dbm = 0.0;  // weak macro
    cfg.fleet = {LapSpec{}};
    cfg.radio.min_serving_rss_dbm = -200;
    const Scenario s = generate_scenario(cfg, 3);
    Placement p(3, 1);
    p << 1600, 1600, 200;
    CHECK(objective(s, p) == 50);
  }
  SUBCASE("capacity one reproduces the literal one-UE-per-LAP constraint") {
    ScenarioGenConfig cfg;
    cfg.fleet = std::vector<LapSpec>(3);
    for (auto& lap : cfg.fleet) lap.capacity = 1;
    const Scenario s = generate_scenario(cfg, 11);
    Placement p(3, 3);
    p << 1600, 1500, 1700,  //
        1600, 1600, 1500,   //
        200, 200, 200;
    CHECK(objective(s, p) <= 3);
    CHECK(objective(s, p) == 3);
  }
}

TEST_CASE("placement helpers") {
  Scenario s = line_scenario(2);
  s.fleet[1].altitude_m = 120;
  Eigen::VectorXd xy(4);
  xy << 1, 2, 3, 4;
  const Placement p = placement_from_xy(s, xy);
  CHECK(p(2, 0) == 200);
  CHECK(p(2, 1) == 120);
  CHECK(p(0, 1) == 3);
  CHECK(xy_from_placement(p) == xy);
  CHECK_NOTHROW(validate_placement(s, p));
  Placement out = p;
  out(0, 0) = -1;
  CHECK_THROWS_AS(validate_placement(s, out), Error);
  CHECK_THROWS_AS(validate_placement(s, Placement(3, 1)), Error);
}
