#include <cmath>
#include <complex>

#include "doctest.h"
#include "xilab/xi.hpp"

using namespace xilab;
using cd = std::complex<double>;

TEST_CASE("trivially forced values at s = 0, 1") {
  CHECK(std::abs(xi_direct(cd(0.0, 0.0)) - cd(0.5, 0.0)) < 1e-13);
  CHECK(std::abs(xi_direct(cd(1.0, 0.0)) - cd(0.5, 0.0)) < 1e-13);
}

TEST_CASE("pinned values against the completed-zeta oracle") {
  CHECK(xi_direct(cd(0.5, 0.0)).real() ==
        doctest::Approx(0.4971207781883141).epsilon(1e-13));
  const cd v = xi_direct(cd(0.75, 2.0));
  CHECK(v.real() == doctest::Approx(0.45364490606988226).epsilon(1e-11));
  CHECK(v.imag() == doctest::Approx(0.010550772598675971).epsilon(1e-9));
}

TEST_CASE("functional equation residual on the strip grid") {
  for (double s : {0.0, -0.2, 0.2, -0.4, 0.4})
    for (double om : {0.0, 2.0, 5.0, 10.0, 20.0})
      CHECK(xi_functional_residual(cd(0.5 + s, om)) < 1e-10);
}

TEST_CASE("critical line values are real") {
  for (double om : {0.0, 1.0, 5.0, 14.0, 25.0})
    CHECK(std::isfinite(xi_critical_line(om)));
  CHECK(xi_critical_line(0.0) > 0.0);
  CHECK(xi_critical_line(14.0) > 0.0);
  CHECK(xi_critical_line(14.2) < 0.0);
}

TEST_CASE("first two critical-line sign changes") {
  CHECK(find_critical_zero(14.0, 15.0, 1e-9) ==
        doctest::Approx(14.1347251417346938).epsilon(1e-8));
  CHECK(find_critical_zero(21.0, 22.0, 1e-9) ==
        doctest::Approx(21.0220396387715550).epsilon(1e-8));
  CHECK_THROWS_AS(find_critical_zero(15.0, 16.0, 1e-9), NoSignChangeError);
}
