#include "xilab/xi.hpp"

#include <cmath>

#include "xilab/quadrature.hpp"
#include "xilab/theta.hpp"

namespace xilab {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Truncation point in u = (log x)/2: the integrand is bounded by
// 2 e^{c u} * 1.01 e^{-pi e^{2u}} with c = max(Re s, 1 - Re s).
double u_cutoff(double c, double bound) {
  const double logb = std::log(bound);
  double u = 1.0;
  for (int i = 0; i < 100; ++i) {
    if (std::log(2.02) + c * u - kPi * std::exp(2.0 * u) <= logb) return u;
    u += 0.1;
  }
  return u;
}

}  // namespace

std::complex<double> xi_direct(std::complex<double> s, double tol) {
  if (!(tol > 0.0)) throw DomainError("xi_direct: tol must be positive");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("xi_direct: s must be finite");
  const double a = s.real();
  const double om = s.imag();
  const double c = std::max(a, 1.0 - a);
  const double umax = std::max(2.0, u_cutoff(c, tol * 1e-3));
  const double wpw = (om != 0.0) ? kPi / (2.0 * std::fabs(om)) : 0.0;

  auto wx = [](double u) { return theta_w(std::exp(2.0 * u), 1e-17).value; };
  QuadOptions opt;
  opt.tol = tol * 0.5;
  opt.max_panel_width = wpw;

  const QuadratureResult re = integrate(
      [&](double u) {
        return (std::exp(a * u) + std::exp((1.0 - a) * u)) * wx(u) *
               std::cos(om * u);
      },
      0.0, umax, opt);
  QuadratureResult im{0.0, 0.0, 0};
  if (om != 0.0) {
    im = integrate(
        [&](double u) {
          return (std::exp(a * u) - std::exp((1.0 - a) * u)) * wx(u) *
                 std::sin(om * u);
        },
        0.0, umax, opt);
  }
  // dx/x = 2 du
  const std::complex<double> integral(2.0 * re.value, 2.0 * im.value);
  return 0.5 * (1.0 + s * (s - 1.0) * integral);
}

double xi_functional_residual(std::complex<double> s) {
  return std::abs(xi_direct(s) - xi_direct(1.0 - s));
}

double xi_critical_line(double omega) {
  const std::complex<double> z = xi_direct({0.5, omega}, 1e-12);
  if (std::fabs(z.imag()) >= 1e-10)
    throw ConsistencyError("xi_critical_line: nonzero imaginary part");
  return z.real();
}

double find_critical_zero(double bracket_lo, double bracket_hi, double tol) {
  if (!(bracket_hi > bracket_lo))
    throw DomainError("find_critical_zero: empty bracket");
  if (!(tol > 0.0)) throw DomainError("find_critical_zero: tol > 0 required");
  double lo = bracket_lo, hi = bracket_hi;
  double flo = xi_critical_line(lo);
  double fhi = xi_critical_line(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSignChangeError("find_critical_zero: no sign change on bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = xi_critical_line(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace xilab
