#include "xilab/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "xilab/quadrature.hpp"
#include "xilab/theta.hpp"
#include "xilab/xi.hpp"

namespace xilab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTermCap = 200;

double powi(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace

QuadratureResult contradiction_integral(double sigma, double t0c, double tol) {
  if (!(sigma >= 0.0 && sigma < 0.5))
    throw DomainError("contradiction_integral: sigma in [0, 1/2) required");
  if (!(t0c > 0.0)) throw DomainError("contradiction_integral: t0c > 0");
  const double t2c = 2.0 * t0c;
  const double omega = kPi / (2.0 * t0c);
  const double ch = std::cosh(2.0 * sigma * t0c);
  QuadOptions opt;
  // The integrand scale collapses with E0(t0c - t2c) for large t0c; make
  // the tolerance relative to it so the error estimate resolves the sign.
  const double scale =
      std::fabs(e0_shift_diff(t0c, t2c)) * (ch - 1.0) * t0c;
  opt.tol = std::max(tol * std::max(scale, 0.0), 1e-320);
  return integrate(
      [&](double tau) {
        return e0_shift_diff(tau, t2c) *
               (ch - std::cosh(2.0 * sigma * tau)) * std::sin(omega * tau);
      },
      0.0, t0c, opt);
}

TruncatedSum a_of_y(double y, double tol) {
  if (!(y > 0.0)) throw DomainError("a_of_y: y > 0 required");
  double sum = 0.0, comp = 0.0;
  for (int n = 1; n <= kTermCap; ++n) {
    const double n2 = (double)n * n;
    const double term =
        n2 * std::exp(-n2 * y) * (-4.0 * n2 * n2 * y * y + 15.0 * n2 * y - 7.5);
    const double yk = term - comp;
    const double tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
    const double m2 = (n + 1.0) * (n + 1.0);
    const double maj =
        m2 * std::exp(-m2 * y) * (4.0 * m2 * m2 * y * y + 15.0 * m2 * y + 7.5);
    const double r = powi((n + 2.0) / (n + 1.0), 6) *
                     std::exp(-(2.0 * n + 3.0) * y);
    if (r < 0.5 && maj / (1.0 - r) <= tol * std::max(1.0, std::fabs(sum)))
      return {sum, maj / (1.0 - r), n};
  }
  throw ToleranceError("a_of_y: tolerance not reached within cap");
}

TruncatedSum da_dy(double y, double tol) {
  if (!(y > 0.0)) throw DomainError("da_dy: y > 0 required");
  double sum = 0.0, comp = 0.0;
  for (int n = 1; n <= kTermCap; ++n) {
    const double n2 = (double)n * n;
    const double term = n2 * n2 * std::exp(-n2 * y) *
                        (4.0 * n2 * n2 * y * y - 23.0 * n2 * y + 22.5);
    const double yk = term - comp;
    const double tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
    const double m2 = (n + 1.0) * (n + 1.0);
    const double maj = m2 * m2 * std::exp(-m2 * y) *
                       (4.0 * m2 * m2 * y * y + 23.0 * m2 * y + 22.5);
    const double r = powi((n + 2.0) / (n + 1.0), 8) *
                     std::exp(-(2.0 * n + 3.0) * y);
    if (r < 0.5 && maj / (1.0 - r) <= tol * std::max(1.0, std::fabs(sum)))
      return {sum, maj / (1.0 - r), n};
  }
  throw ToleranceError("da_dy: tolerance not reached within cap");
}

std::pair<double, double> quadratic_roots(int n) {
  if (n < 1) throw DomainError("quadratic_roots: n >= 1 required");
  const double n2 = (double)n * n;
  const double root = std::sqrt(105.0);
  return {(15.0 - root) / (8.0 * n2), (15.0 + root) / (8.0 * n2)};
}

ClaimResult bound_chain_check(double tol) {
  ClaimResult c;
  c.claim_id = "bound_chain_minus_2352";
  const double e8 = std::exp(8.0);
  const double rhs = -e8 + 1.0 + 40.0 * std::exp(-1.0) * 256.0 / 6.0;
  c.measured = rhs;
  c.expected = -2352.0;
  c.tolerance = tol;
  bool ok = std::fabs(rhs + 2352.0) <= tol;

  double sup = -1e300;
  for (int i = 0; i <= 50; ++i) {
    const double y = kPi + (3.16 - kPi) * i / 50.0;
    sup = std::max(sup, std::exp(3.0) * da_dy(y).value * (e8 - 1.0) / 6.0);
  }
  ok = ok && sup < 0.0;

  double rem = 0.0;
  for (int n = 2; n <= 60; ++n)
    rem += 40.0 * powi((double)n, 8) * std::exp(3.0 - 3.0 * n * n);
  const double rem_bound = 40.0 * 256.0 * std::exp(-1.0) / (e8 - 1.0);
  ok = ok && rem < rem_bound;

  c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = fmt("sup_scaled_da_dy=%.6g remainder=%.12g", sup, rem) +
             fmt(" remainder_bound=%.12g", rem_bound);
  return c;
}

ClaimResult strict_decrease_scan(const GridSpec& grid) {
  if (!(grid.lo > 0.0 && grid.hi > grid.lo && grid.step > 0.0))
    throw DomainError("strict_decrease_scan: need 0 < lo < hi, step > 0");
  ClaimResult c;
  c.claim_id = "e0_strict_decrease";
  double max_deriv = -1e300;
  bool monotone = true;
  double prev_log = e0_log(grid.lo);
  for (double t = grid.lo; t <= grid.hi + 0.5 * grid.step; t += grid.step) {
    max_deriv = std::max(max_deriv, e0_log_deriv(t));
    if (t > grid.lo) {
      const double cur = e0_log(t);
      if (!(cur < prev_log)) monotone = false;
      prev_log = cur;
    }
  }
  c.measured = max_deriv;
  c.expected = -1.0;  // sign expectation
  c.status =
      (max_deriv < 0.0 && monotone) ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = fmt("max d(log E0)/dt on grid = %.6g; monotone=%d", max_deriv,
                 monotone ? 1.0 : 0.0);
  return c;
}

ClaimResult shifted_gap_positivity(double t0c, const GridSpec& grid) {
  if (!(t0c > 0.0)) throw DomainError("shifted_gap_positivity: t0c > 0");
  const double step = grid.step > 0.0 ? grid.step : t0c / 50.0;
  ClaimResult c;
  c.claim_id = "shifted_gap_positive";
  const double t2c = 2.0 * t0c;
  double min_gap = 1e300;
  for (double t = step; t < t0c - 0.5 * step; t += step)
    min_gap = std::min(min_gap, e0_shift_diff(t, t2c));
  const double at_zero = e0_shift_diff(0.0, t2c);
  c.measured = min_gap;
  c.expected = 1.0;  // sign expectation
  c.status = (min_gap > 0.0 && std::fabs(at_zero) < 1e-14)
                 ? ClaimStatus::pass
                 : ClaimStatus::fail;
  c.detail = fmt("min interior gap=%.6g, gap(0)=%.3g", min_gap, at_zero);
  return c;
}

ClaimResult falloff_fit(std::pair<double, double> range) {
  ClaimResult c;
  c.claim_id = "e0_falloff_slope";
  std::vector<double> ts, logs;
  const int n = 26;
  for (int i = 0; i < n; ++i) {
    const double t = range.first + (range.second - range.first) * i / (n - 1);
    ts.push_back(t);
    logs.push_back(e0_log(t));
  }
  const double slope = ls_slope(ts, logs);
  c.measured = slope;
  c.expected = -1.5;
  c.tolerance = 0.0;
  c.status = slope <= -1.5 ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = fmt("log E0 slope on [%g, %g]", range.first, range.second) +
             fmt(" = %.6g (floor -1.5)", slope);
  return c;
}

ClaimResult xi_envelope_slope(std::pair<double, double> omega_range) {
  ClaimResult c;
  c.claim_id = "xi_envelope_slope";
  std::vector<double> oms, mags;
  for (double om = omega_range.first; om <= omega_range.second + 1e-9;
       om += 0.05) {
    oms.push_back(om);
    mags.push_back(std::fabs(xi_critical_line(om)));
  }
  std::vector<double> px, py;
  for (size_t i = 1; i + 1 < mags.size(); ++i) {
    if (mags[i] > mags[i - 1] && mags[i] > mags[i + 1]) {
      px.push_back(oms[i]);
      py.push_back(std::log(mags[i]));
    }
  }
  if (px.size() < 3) {
    c.status = ClaimStatus::fail;
    c.detail = "fewer than 3 envelope maxima found";
    return c;
  }
  const double slope = ls_slope(px, py);
  c.measured = slope;
  c.expected = -0.685;  // -pi/4 with polynomial allowance
  c.status = slope <= -0.685 ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = fmt("envelope slope=%.6g from %g maxima", slope, (double)px.size());
  return c;
}

std::vector<ClaimResult> order_constants(double sigma, double t3) {
  if (!(sigma > 0.0 && sigma < 0.5))
    throw DomainError("order_constants: sigma in (0, 1/2)");
  std::vector<ClaimResult> out;

  QuadOptions opt;
  opt.tol = 1e-10;
  const double k00 =
      2.0 * integrate([](double t) { return e0(t).value * std::exp(-t); },
                      0.0, t3, opt)
                .value;
  ClaimResult c0;
  c0.claim_id = "K00_lower_bound";
  c0.measured = k00;
  c0.expected = 0.42;
  c0.status = ClaimStatus::informational;
  c0.detail = fmt("K00=%.12g, stated lower bound 0.42 ", k00) +
              (k00 >= 0.42 ? "(holds)" : "(VIOLATED)");
  out.push_back(c0);

  const double k1 = e0(t3).value;
  ClaimResult c1;
  c1.claim_id = "K1_small";
  c1.measured = k1;
  c1.expected = 0.0;
  c1.status = ClaimStatus::informational;
  c1.detail = fmt("K1=E0(t3)=%.6g, log E0(t3)=%.6g", k1, e0_log(t3));
  out.push_back(c1);

  ClaimResult c2;
  c2.claim_id = "K2_scale";
  c2.measured = 2.0 * k1 * std::exp(t3);
  c2.expected = 0.0;
  c2.status = ClaimStatus::informational;
  c2.detail = fmt("K2=2 E0(t3) e^{t3}=%.6g", c2.measured);
  out.push_back(c2);

  const double T = e0_tilt_cutoff(1.0, 1e-14);
  for (double t0 : {20.0, 40.0, 80.0}) {
    QuadOptions o2;
    o2.tol = 1e-10;
    o2.breakpoints = {-3.0, 0.0, 3.0};
    const double a = integrate(
                         [&](double t) {
                           return e0(t).value * std::exp(-2.0 * sigma * t) *
                                  std::cos(t / t0);
                         },
                         -T, 3.0 * t0, o2)
                         .value;
    ClaimResult ca;
    ca.claim_id = fmt("A_t0_%g", t0);
    ca.measured = a;
    ca.expected = 0.21;
    ca.status = ClaimStatus::informational;
    ca.detail = fmt("A(t0=%g)=%.12g", t0, a) +
                (a > 0.21 ? " (above 0.21)" : " (BELOW 0.21)");
    out.push_back(ca);
  }
  return out;
}

ClaimResult f_at_zero_nonvanishing(double sigma, double t0, double t2) {
  if (!(sigma >= 0.0 && sigma < 0.5))
    throw DomainError("f_at_zero_nonvanishing: sigma in [0, 1/2)");
  ClaimResult c;
  c.claim_id = "f_at_zero_nonvanishing";
  const double closed =
      -2.0 * std::sinh(2.0 * sigma * t0) * e0_shift_diff(t0, t2);
  // Direct assembly from the window definition at t = 0.
  auto epf = [&](double t) { return e0(t).value * std::exp(-sigma * t); };
  auto ep_prime = [&](double t) {
    return std::exp(-sigma * t2) * epf(t - t2) -
           std::exp(sigma * t2) * epf(t + t2);
  };
  const double direct =
      std::exp(-sigma * t0) * ep_prime(t0) + std::exp(sigma * t0) * ep_prime(-t0);
  c.measured = closed;
  c.tolerance = 1e-10;
  const bool boundary = (sigma == 0.0 || t0 == 0.0 || t2 == 0.0);
  c.expected = boundary ? 0.0 : closed;
  const bool agree =
      std::fabs(closed - direct) <= 1e-10 * std::max(1.0, std::fabs(closed));
  bool ok;
  if (boundary) {
    ok = agree && closed == 0.0;
  } else {
    ok = agree && std::fabs(closed) > 0.0;
  }
  c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = fmt("closed=%.12g direct=%.12g", closed, direct);
  return c;
}

}  // namespace xilab
