#include <cmath>

#include "doctest.h"
#include "xilab/fourier.hpp"
#include "xilab/zeros.hpp"

using namespace xilab;

TEST_CASE("first crossing for the default window") {
  WindowParams w;
  const auto rec = first_crossing(w, 50.0, 0.05, 1e-9);
  REQUIRE(rec.has_value());
  CHECK(rec->omega_z > 2.0);
  CHECK(rec->omega_z < 2.5);
  CHECK(rec->bracket.second - rec->bracket.first < 1e-9);
  CHECK(gr(rec->bracket.first, w, 1e-12).value *
            gr(rec->bracket.second, w, 1e-12).value <
        0.0);
  CHECK_FALSE(rec->degenerate);
  CHECK_FALSE(rec->step_too_coarse);
}

TEST_CASE("crossing frequency is even in t0") {
  WindowParams wp, wm;
  wm.t0 = -wm.t0;
  const auto a = first_crossing(wp, 50.0, 0.05, 1e-10);
  const auto b = first_crossing(wm, 50.0, 0.05, 1e-10);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(std::fabs(a->omega_z - b->omega_z) < 1e-8);
}

TEST_CASE("degenerate window yields no crossing") {
  WindowParams w;
  w.t2 = 0.0;
  CHECK_FALSE(first_crossing(w).has_value());
}

TEST_CASE("continuation over a constant path repeats the same record") {
  WindowParams w;
  std::vector<PathPoint> path(5, PathPoint{w.t0, w.t2});
  const auto res = continue_crossing(w, path);
  CHECK_FALSE(res.branch_lost);
  REQUIRE(res.records.size() == 5);
  for (const auto& r : res.records)
    CHECK(r.omega_z == res.records.front().omega_z);
}

TEST_CASE("continuation tracks a short moving path") {
  WindowParams w;
  std::vector<PathPoint> path = {{0.5, 1.0}, {0.45, 1.0}};
  StepControl sc;
  sc.max_step = 0.01;
  const auto res = continue_crossing(w, path, sc);
  CHECK_FALSE(res.branch_lost);
  REQUIRE(res.records.size() >= 2);
  // Endpoint record must agree with an independent scan at the endpoint.
  WindowParams we = w;
  we.t0 = 0.45;
  const auto direct = first_crossing(we, 50.0, 0.05, 1e-9);
  REQUIRE(direct.has_value());
  CHECK(std::fabs(res.records.back().omega_z - direct->omega_z) < 1e-6);
}

TEST_CASE("continuation reports branch loss where the crossing vanishes") {
  // Between t0 = 0.5 and 0.55 (t2 = 1) the two sign changes annihilate and
  // GR stays negative; the tracker must stop with the loss location.
  WindowParams w;
  const auto res = continue_crossing(w, {{0.5, 1.0}, {0.6, 1.0}});
  CHECK(res.branch_lost);
  CHECK(res.lost_at.t0 > 0.5);
  CHECK(res.lost_at.t0 <= 0.6);
  CHECK(!res.records.empty());
}

TEST_CASE("half-line decomposition sums to the full transform") {
  WindowParams w;
  for (double om : {0.7, 1.3, 2.6}) {
    WindowParams wm = w;
    wm.t0 = -w.t0;
    const double sum = podd(om, w).value + podd(om, wm).value;
    const double g = gr(om, w, 1e-12).value;
    CHECK(std::fabs(sum - g) <= 1e-6 * std::max(1e-3, std::fabs(g)));
  }
}

TEST_CASE("quarter-period product stays below the target on this ray") {
  // Along t2 = 2 t0 at sigma = 0.25 the product omega_z * t0 plateaus near
  // 1.0 and never reaches pi/2; the solver must report that as data.
  std::vector<std::array<double, 2>> curve;
  const auto sol = solve_quarter_period(0.25, {0.3, 1.2}, 1e-8, &curve);
  CHECK_FALSE(sol.has_value());
  CHECK(curve.size() >= 3);
  for (const auto& pt : curve) CHECK(pt[1] < 3.14159265358979323846 / 2.0);
}
