#include <cmath>
#include <complex>
#include <limits>

#include "doctest.h"
#include "xilab/fourier.hpp"
#include "xilab/theta.hpp"
#include "xilab/xi.hpp"

using namespace xilab;
using cd = std::complex<double>;

TEST_CASE("window validation") {
  CHECK_THROWS_AS(validate_window(WindowParams{0.0, 1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(validate_window(WindowParams{0.5, 1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(validate_window(WindowParams{0.6, 1.0, 0.5}), DomainError);
  CHECK_NOTHROW(validate_window(WindowParams{0.25, 0.0, 0.5}));
}

TEST_CASE("tilted transform equals xi on the strip") {
  for (double s : {0.0, 0.25, 0.4})
    for (double om : {0.0, 1.0, 5.0}) {
      const cd a = ep_omega(StripPoint{s, om});
      const cd b = xi_direct(cd(0.5 + s, om));
      CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("shifted-difference transform product form is self-consistent") {
  // ep_prime_omega cross-checks its product form against the direct
  // transform internally and throws on disagreement.
  CHECK_NOTHROW(ep_prime_omega(StripPoint{0.25, 1.0}, 1.0));
  const cd v = ep_prime_omega(StripPoint{0.25, 0.0}, 1.0);
  // At omega = 0 the product multiplier is -2 sinh(sigma t2).
  const cd expect = ep_omega(StripPoint{0.25, 0.0}) *
                    cd(-2.0 * std::sinh(0.25), 0.0);
  CHECK(std::abs(v - expect) < 1e-10);
}

TEST_CASE("lorentzian factor") {
  CHECK(h_omega(0.0, 0.25) == doctest::Approx(8.0));
  CHECK(h_omega(0.25, 0.25) == doctest::Approx(4.0));  // omega = sigma -> 1/sigma
  CHECK(h_omega(1.0, 0.25) == doctest::Approx(0.5 / (0.0625 + 1.0)));
  CHECK(h_omega(-1.0, 0.25) == h_omega(1.0, 0.25));
  CHECK_THROWS_AS(h_omega(1.0, 0.0), DomainError);
  // Total mass 2 pi (inverse transform at zero).
  QuadOptions opt;
  opt.tol = 1e-10;
  const double mass =
      2.0 * integrate([](double x) { return h_omega(x, 0.25); }, 0.0, 4000.0,
                      opt)
                .value +
      2.0 * 2.0 * 0.25 / 4000.0;  // analytic tail to first order
  CHECK(mass == doctest::Approx(2.0 * 3.14159265358979323846).epsilon(1e-4));
}

TEST_CASE("two-sided kernel integral matches the xi oracle") {
  const auto r = integrate_decaying(
      [](double t) { return e0(t).value; },
      -std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity(), 1e-12);
  CHECK(r.value ==
        doctest::Approx(xi_direct(cd(0.5, 0.0)).real()).epsilon(1e-9));
}

TEST_CASE("tilted transform vanishes at the first critical zero") {
  CHECK(std::abs(ep_omega(StripPoint{0.0, 14.1347251417346938})) < 1e-6);
}

TEST_CASE("shifted transform degenerate and limit cases") {
  CHECK(std::abs(ep_prime_omega(StripPoint{0.25, 1.0}, 0.0)) < 1e-12);
  // sigma = 0: multiplier collapses to -2i sin(omega t2).
  const cd v = ep_prime_omega(StripPoint{0.0, 1.0}, 1.0);
  const cd expect =
      ep_omega(StripPoint{0.0, 1.0}) * cd(0.0, -2.0 * std::sin(1.0));
  CHECK(std::abs(v - expect) < 1e-10);
}

TEST_CASE("product transform degenerate cases") {
  WindowParams w;
  w.t0 = 0.0;
  const cd v = f_omega(1.0, w);
  const cd expect = 2.0 * ep_prime_omega(StripPoint{w.sigma, 1.0}, w.t2);
  CHECK(std::abs(v - expect) < 1e-9);
}

TEST_CASE("convolution symmetry and degenerate window") {
  WindowParams w;
  const double plus = fr_convolution(1.0, w, 1e-6).value;
  const double minus = fr_convolution(-1.0, w, 1e-6).value;
  CHECK(plus == doctest::Approx(minus).epsilon(1e-8));
  WindowParams wz = w;
  wz.t2 = 0.0;
  CHECK(fr_convolution(1.0, wz, 1e-6).value == 0.0);
}

TEST_CASE("transform falls off like one over omega squared") {
  WindowParams w;
  for (double om : {50.0, 100.0, 200.0})
    CHECK(std::fabs(gr(om, w, 1e-10).value) * om * om < 100.0);
}

TEST_CASE("partial in omega vanishes at omega = 0") {
  WindowParams w;
  CHECK(gr_partials(0.0, w, GrPartial::domega).value == 0.0);
}

TEST_CASE("pinned half-line and full transforms") {
  WindowParams w;  // sigma=0.25, t2=1, t0=0.5
  CHECK(g1r(1.0, w).value ==
        doctest::Approx(0.3771389303727197).epsilon(1e-9));
  CHECK(gr(1.0, w).value ==
        doctest::Approx(-0.3601243475119091).epsilon(1e-9));
  CHECK(gr(2.0, w).value ==
        doctest::Approx(-0.01349556632505089).epsilon(1e-7));
}

TEST_CASE("gr symmetries and degenerate window") {
  WindowParams w;
  CHECK(gr(1.3, w).value == doctest::Approx(gr(-1.3, w).value).epsilon(1e-10));
  WindowParams wm = w;
  wm.t0 = -w.t0;
  CHECK(gr(1.3, w).value == doctest::Approx(gr(1.3, wm).value).epsilon(1e-9));
  WindowParams wz = w;
  wz.t2 = 0.0;
  CHECK(gr(1.0, wz).value == 0.0);
  CHECK(g1r(1.0, wz).value == 0.0);
}

TEST_CASE("convolution against the direct transform") {
  WindowParams w;
  const double direct = f_omega(2.0, w, 1e-11).real();
  CHECK(direct == doctest::Approx(-0.05357837753183723).epsilon(1e-8));
  const QuadratureResult conv = fr_convolution(2.0, w, 1e-7);
  CHECK(std::fabs(conv.value - direct) <
        1e-5 * std::max(1e-12, std::fabs(direct)) + conv.err_estimate);
  CHECK(std::fabs(conv.value - direct) < 1e-6);
}

TEST_CASE("analytic partials match finite differences") {
  WindowParams w;
  const double om = 1.0;
  auto rel = [](double a, double b) {
    return std::fabs(a - b) / std::max(1e-12, std::fabs(b));
  };

  double h = 1e-4;
  double fd = (gr(om + h, w, 1e-12).value - gr(om - h, w, 1e-12).value) /
              (2 * h);
  CHECK(rel(gr_partials(om, w, GrPartial::domega).value, fd) < 1e-5);

  h = 1e-3;
  fd = (gr(om + h, w, 1e-12).value - 2.0 * gr(om, w, 1e-12).value +
        gr(om - h, w, 1e-12).value) /
       (h * h);
  CHECK(rel(gr_partials(om, w, GrPartial::domega2).value, fd) < 1e-4);

  h = 1e-5;
  WindowParams wp = w, wm = w;
  wp.t0 += h;
  wm.t0 -= h;
  fd = (gr(om, wp, 1e-12).value - gr(om, wm, 1e-12).value) / (2 * h);
  CHECK(rel(gr_partials(om, w, GrPartial::dt0).value, fd) < 1e-5);

  wp = w;
  wm = w;
  wp.t2 += h;
  wm.t2 -= h;
  fd = (gr(om, wp, 1e-12).value - gr(om, wm, 1e-12).value) / (2 * h);
  CHECK(rel(gr_partials(om, w, GrPartial::dt2).value, fd) < 1e-5);
}
