#include <cmath>

#include "doctest.h"
#include "xilab/quadrature.hpp"

using namespace xilab;

TEST_CASE("polynomial and smooth integrands") {
  QuadOptions opt;
  opt.tol = 1e-12;
  auto r = integrate([](double x) { return x * x; }, 0.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(r.err_estimate < 1e-12);

  r = integrate([](double x) { return std::sin(x); }, 0.0,
                3.14159265358979323846, opt);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("oscillatory integrand with panel-width cap") {
  QuadOptions opt;
  opt.tol = 1e-11;
  opt.max_panel_width = 3.14159265358979323846 / 40.0;
  auto r = integrate([](double x) { return std::cos(20.0 * x); }, 0.0, 10.0,
                     opt);
  CHECK(r.value == doctest::Approx(std::sin(200.0) / 20.0).epsilon(1e-10));
}

TEST_CASE("infinite endpoints truncate at a probed cutoff") {
  auto r = integrate_decaying(
      [](double x) { return std::exp(-x * x); },
      -std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity(), 1e-12);
  CHECK(r.value == doctest::Approx(std::sqrt(3.14159265358979323846))
                       .epsilon(1e-12));
}

TEST_CASE("panel cap raises the tolerance error") {
  QuadOptions opt;
  opt.tol = 1e-300;
  opt.panel_cap = 16;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sin(50.0 * x) / (1e-3 + x); },
                0.0, 10.0, opt),
      ToleranceError);
}

TEST_CASE("breakpoints land on panel boundaries deterministically") {
  QuadOptions opt;
  opt.tol = 1e-12;
  opt.breakpoints = {0.5};
  auto f = [](double x) { return std::fabs(x - 0.5); };
  auto r = integrate(f, 0.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-13));
  auto r2 = integrate(f, 0.0, 1.0, opt);
  CHECK(r.value == r2.value);  // bitwise repeatable
}
