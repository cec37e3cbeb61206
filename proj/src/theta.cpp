#include "xilab/theta.hpp"

#include <cmath>

namespace xilab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTermCap = 200;

struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double pow4(double r) { return (r * r) * (r * r); }

}  // namespace

TruncatedSum theta_w(double x, double tol) {
  if (!(x > 0.0)) throw DomainError("theta_w: x must be positive");
  if (!(tol > 0.0)) throw DomainError("theta_w: tol must be positive");
  Kahan acc;
  for (int n = 1; n <= kTermCap; ++n) {
    acc.add(std::exp(-kPi * n * n * x));
    const double next = std::exp(-kPi * (n + 1.0) * (n + 1.0) * x);
    const double r = std::exp(-kPi * (2.0 * n + 3.0) * x);
    if (r < 0.5) {
      const double tail = next / (1.0 - r);
      if (tail <= tol * std::max(1.0, std::fabs(acc.sum))) {
        return {acc.sum, tail, n};
      }
    }
  }
  throw ToleranceError("theta_w: tolerance not reached within term cap");
}

double jacobi_identity_residual(double x) {
  if (!(x > 0.0)) throw DomainError("jacobi_identity_residual: x > 0 required");
  const double lhs = 1.0 + 2.0 * theta_w(x, 1e-16).value;
  const double rhs = (1.0 + 2.0 * theta_w(1.0 / x, 1e-16).value) / std::sqrt(x);
  return lhs - rhs;
}

TruncatedSum e0_raw(double t, double tol) {
  if (!(tol > 0.0)) throw DomainError("e0: tol must be positive");
  if (!std::isfinite(t)) throw DomainError("e0: t must be finite");
  const double q = std::exp(2.0 * t);
  const double root = std::exp(0.5 * t);
  // Far right of the underflow wall every term is an exact double zero;
  // bail out before q*q can overflow into inf * 0 = NaN territory.
  if (kPi * q > 760.0 + 0.5 * t + 4.0 * std::log(std::max(q, 1.0)))
    return {0.0, 0.0, 0};
  Kahan acc;
  for (int n = 1; n <= kTermCap; ++n) {
    const double n2 = (double)n * n;
    const double u = kPi * n2 * q;
    acc.add((4.0 * kPi * kPi * n2 * n2 * q * q - 6.0 * kPi * n2 * q) *
            std::exp(-u) * root);
    // Majorant of the next term and a geometric ratio bound for the rest.
    const double m2 = (n + 1.0) * (n + 1.0);
    const double nextmaj =
        (4.0 * kPi * kPi * m2 * m2 * q * q + 6.0 * kPi * m2 * q) *
        std::exp(-kPi * m2 * q) * root;
    const double r =
        pow4((n + 2.0) / (n + 1.0)) * std::exp(-kPi * (2.0 * n + 3.0) * q);
    if (r < 0.5) {
      const double tail = nextmaj / (1.0 - r);
      if (tail <= tol * std::max(1.0, std::fabs(acc.sum))) {
        return {acc.sum, tail, n};
      }
    }
  }
  throw ToleranceError("e0: tolerance not reached within term cap");
}

TruncatedSum e0(double t, double tol) { return e0_raw(std::fabs(t), tol); }

double e0_log(double t) {
  const double a = std::fabs(t);
  if (a > 300.0) throw DomainError("e0_log: |t| too large");
  if (a < 2.5) {
    return std::log(e0(a).value);
  }
  // n = 1 term dominates; the n >= 2 correction is below exp(-3 pi e^{2a}),
  // entirely negligible at this scale.
  const double q = std::exp(2.0 * a);
  return -kPi * q + 0.5 * a + 2.0 * std::log(q) +
         std::log(4.0 * kPi * kPi - 6.0 * kPi / q);
}

double e0_log_deriv(double t) {
  if (t == 0.0) return 0.0;
  const double a = std::fabs(t);
  double d;
  if (a <= 1.5) {
    d = de0_dt(a) / e0(a).value;
  } else {
    // d/da of the dominant-term log form.
    const double q = std::exp(2.0 * a);
    d = -2.0 * kPi * q + 0.5 +
        (16.0 * kPi * kPi * q - 12.0 * kPi) / (4.0 * kPi * kPi * q - 6.0 * kPi);
  }
  return t > 0.0 ? d : -d;
}

double ep(double t, double sigma, double tol) {
  if (!(std::fabs(sigma) < 0.5)) throw DomainError("ep: |sigma| < 1/2 required");
  return e0(t, tol).value * std::exp(-sigma * t);
}

double e0_shift_diff(double t, double t2, double tol) {
  return e0(t - t2, tol).value - e0(t + t2, tol).value;
}

double e0n_shift_diff(double t, double t2, double tol) {
  return e0_shift_diff(-t, t2, tol);
}

double de0_dt(double t, double tol) {
  if (!(tol > 0.0)) throw DomainError("de0_dt: tol must be positive");
  if (t == 0.0) return 0.0;  // odd function; the summed residual is noise
  const double a = std::fabs(t);
  const double q = std::exp(2.0 * a);
  const double root = std::exp(0.5 * a);
  Kahan acc;
  for (int n = 1; n <= kTermCap; ++n) {
    const double n2 = (double)n * n;
    const double u = kPi * n2 * q;
    acc.add(2.0 * kPi * n2 * q * std::exp(-u) * root *
            (-4.0 * kPi * kPi * n2 * n2 * q * q + 15.0 * kPi * n2 * q - 7.5));
    const double m2 = (n + 1.0) * (n + 1.0);
    const double nextmaj =
        2.0 * kPi * m2 * q * std::exp(-kPi * m2 * q) * root *
        (4.0 * kPi * kPi * m2 * m2 * q * q + 15.0 * kPi * m2 * q + 7.5);
    const double rr = (n + 2.0) / (n + 1.0);
    const double r = pow4(rr) * rr * rr * std::exp(-kPi * (2.0 * n + 3.0) * q);
    if (r < 0.5 &&
        nextmaj / (1.0 - r) <= tol * std::max(1.0, std::fabs(acc.sum))) {
      return (t >= 0.0 ? acc.sum : -acc.sum);
    }
  }
  throw ToleranceError("de0_dt: tolerance not reached within cap");
}

double theta_delta_identity(double tol) {
  if (!(tol > 0.0)) throw DomainError("theta_delta_identity: tol > 0 required");
  Kahan acc;
  for (int n = 1; n <= kTermCap; ++n) {
    const double n2 = (double)n * n;
    acc.add(std::exp(-kPi * n2) * (1.0 - 4.0 * kPi * n2));
    const double m2 = (n + 1.0) * (n + 1.0);
    const double nextmaj = std::exp(-kPi * m2) * (1.0 + 4.0 * kPi * m2);
    const double r = ((n + 2.0) * (n + 2.0)) / ((n + 1.0) * (n + 1.0)) *
                     std::exp(-kPi * (2.0 * n + 3.0));
    if (r < 0.5 && nextmaj / (1.0 - r) <= tol) return acc.sum;
  }
  throw ToleranceError("theta_delta_identity: term cap reached");
}

double e0_tilt_cutoff(double rate, double bound) {
  // Majorant: E0(c) <= 8 pi^2 e^{4.5 c} e^{-pi e^{2c}} for c >= 1 (twice the
  // n = 1 term envelope).
  const double logb = std::log(bound);
  double c = 1.0;
  for (int i = 0; i < 300; ++i) {
    const double logmaj =
        std::log(8.0 * kPi * kPi) + 4.5 * c - kPi * std::exp(2.0 * c) +
        rate * c;
    if (logmaj <= logb) return c;
    c += 0.25;
  }
  return c;
}

}  // namespace xilab
