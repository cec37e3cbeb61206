#include <cmath>

#include "doctest.h"
#include "xilab/claims.hpp"
#include "xilab/theta.hpp"

using namespace xilab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("contradiction integral pinned value and boundary") {
  const auto r = contradiction_integral(0.25, 0.5);
  CHECK(r.value == doctest::Approx(2.620930028843509e-5).epsilon(1e-9));
  CHECK(r.value > 10.0 * r.err_estimate);
  CHECK(std::fabs(contradiction_integral(0.0, 0.5).value) < 1e-12);
  CHECK_THROWS_AS(contradiction_integral(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(contradiction_integral(0.25, 0.0), DomainError);
}

TEST_CASE("series A(y): zero at pi, sign structure") {
  CHECK(std::fabs(a_of_y(kPi).value) < 1e-10);
  CHECK(a_of_y(2.0).value > 0.0);
  CHECK(a_of_y(3.16).value < 0.0);
  for (int i = 1; i <= 50; ++i)
    CHECK(a_of_y(kPi + (3.16 - kPi) * i / 50.0).value < 0.0);
  for (int i = 1; i <= 20; ++i)
    CHECK(a_of_y(kPi + (10.0 - kPi) * i / 20.0).value < 0.0);
  CHECK_THROWS_AS(a_of_y(0.0), DomainError);
}

TEST_CASE("A(y) bridges to the kernel derivative") {
  for (double t = -1.0; t <= 1.5 + 1e-9; t += 0.5) {
    const double lhs = de0_dt(t) / 2.0;
    const double rhs =
        kPi * std::exp(2.5 * t) * a_of_y(kPi * std::exp(2.0 * t)).value;
    // Floor keeps the t = 0 point (both sides vanish) meaningful.
    CHECK(std::fabs(lhs - rhs) <=
          1e-8 * std::max({std::fabs(lhs), std::fabs(rhs), 1e-7}));
  }
}

TEST_CASE("dA/dy: finite-difference consistency and sign") {
  const double h = 1e-5;
  const double fd = (a_of_y(3.0 + h).value - a_of_y(3.0 - h).value) / (2 * h);
  CHECK(da_dy(3.0).value == doctest::Approx(fd).epsilon(1e-6));
  CHECK(da_dy(kPi).value < 0.0);
  // n=1 term at y=3 is e^{-3} (4*9 - 23*3 + 22.5) = -10.5 e^{-3}; adding
  // the n=2 term 16 e^{-12} (576 - 276 + 22.5) reproduces the full sum.
  const double two_terms =
      -10.5 * std::exp(-3.0) + 16.0 * std::exp(-12.0) * 322.5;
  CHECK(da_dy(3.0).value == doctest::Approx(two_terms).epsilon(1e-4));
}

TEST_CASE("bracket roots") {
  const auto [r1, r2] = quadratic_roots(1);
  CHECK(r1 == doctest::Approx((15.0 - std::sqrt(105.0)) / 8.0).epsilon(1e-15));
  CHECK(r2 == doctest::Approx((15.0 + std::sqrt(105.0)) / 8.0).epsilon(1e-15));
  const auto [s1, s2] = quadratic_roots(2);
  CHECK(s1 == doctest::Approx(r1 / 4.0).epsilon(1e-15));
  CHECK(s2 == doctest::Approx(r2 / 4.0).epsilon(1e-15));
  for (double y : {r1, r2})
    CHECK(std::fabs(-4.0 * y * y + 15.0 * y - 7.5) < 1e-10);
  CHECK_THROWS_AS(quadratic_roots(0), DomainError);
}

TEST_CASE("the -2352 bound chain holds") {
  const ClaimResult c = bound_chain_check();
  CHECK(c.status == ClaimStatus::pass);
  CHECK(c.measured == doctest::Approx(-2352.0).epsilon(1e-3));
}

TEST_CASE("strict decrease on (0, 10]") {
  const ClaimResult c = strict_decrease_scan(GridSpec{0.01, 10.0, 0.01});
  CHECK(c.status == ClaimStatus::pass);
  CHECK(c.measured < 0.0);
  // Reflected side: the derivative flips sign (even kernel).
  CHECK(e0_log_deriv(-1.0) > 0.0);
}

TEST_CASE("shifted gap positivity") {
  for (double t0c : {0.5, 1.0}) {
    const ClaimResult c = shifted_gap_positivity(t0c, GridSpec{});
    CHECK(c.status == ClaimStatus::pass);
    CHECK(c.measured > 0.0);
  }
  // Interior sample from the definition.
  CHECK(e0_shift_diff(0.5, 2.0) > 0.0);
}

TEST_CASE("falloff slopes") {
  const ClaimResult a = falloff_fit({3.0, 8.0});
  CHECK(a.status == ClaimStatus::pass);
  CHECK(a.measured <= -1.5);
}

TEST_CASE("window value at t = 0") {
  const ClaimResult c = f_at_zero_nonvanishing(0.25, 1.0, 1.0);
  CHECK(c.status == ClaimStatus::pass);
  const double expect =
      -2.0 * std::sinh(0.5) * (e0(0.0).value - e0(2.0).value);
  CHECK(c.measured == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::fabs(c.measured) > 0.0);
  // Boundary cases collapse to zero.
  CHECK(f_at_zero_nonvanishing(0.25, 0.0, 1.0).measured == 0.0);
  CHECK(f_at_zero_nonvanishing(0.0, 1.0, 1.0).measured == 0.0);
}
