#include "xilab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "xilab/theta.hpp"

namespace xilab {
namespace {

constexpr double kPi = 3.14159265358979323846;

double window_cutoff(const WindowParams& w, double tol) {
  // The slowest-decaying factor in any windowed integrand is E0 shifted by
  // at most |t0| + |t2| and tilted by at most e^{|t|} (2 sigma < 1).
  return e0_tilt_cutoff(1.0, 0.25 * tol * 1e-3) + std::fabs(w.t0) +
         std::fabs(w.t2);
}

double shift_diff(double x, double t2) { return e0_shift_diff(x, t2); }

}  // namespace

void validate_window(const WindowParams& w) {
  if (!(w.sigma > 0.0 && w.sigma < 0.5))
    throw DomainError("WindowParams: sigma must be in (0, 1/2)");
  if (!std::isfinite(w.t2) || !std::isfinite(w.t0))
    throw DomainError("WindowParams: shifts must be finite");
}

std::complex<double> ep_omega(const StripPoint& p, double tol) {
  if (!(std::fabs(p.sigma) < 0.5))
    throw DomainError("ep_omega: |sigma| < 1/2 required");
  const double T = e0_tilt_cutoff(0.5, tol * 1e-3);
  const double wpw = (p.omega != 0.0) ? kPi / (2.0 * std::fabs(p.omega)) : 0.0;
  QuadOptions opt;
  opt.tol = tol * 0.5;
  opt.max_panel_width = wpw;
  auto kern = [&p](double t) {
    return e0(t, 1e-16).value * std::exp(-p.sigma * t);
  };
  const QuadratureResult re = integrate(
      [&](double t) { return kern(t) * std::cos(p.omega * t); }, -T, T, opt);
  QuadratureResult im{0.0, 0.0, 0};
  if (p.omega != 0.0) {
    im = integrate([&](double t) { return -kern(t) * std::sin(p.omega * t); },
                   -T, T, opt);
  }
  return {re.value, im.value};
}

std::complex<double> ep_prime_omega(const StripPoint& p, double t2,
                                    double tol) {
  if (t2 == 0.0) return {0.0, 0.0};
  const std::complex<double> base = ep_omega(p, tol * 0.1);
  const std::complex<double> iwt(0.0, p.omega * t2);
  const std::complex<double> product =
      base * (std::exp(-p.sigma * t2) * std::exp(-iwt) -
              std::exp(p.sigma * t2) * std::exp(iwt));

  // Independent route: transform of [E0(t-t2) - E0(t+t2)] e^{-sigma t}.
  const double T = e0_tilt_cutoff(0.5, tol * 1e-3) + std::fabs(t2);
  const double wpw = (p.omega != 0.0) ? kPi / (2.0 * std::fabs(p.omega)) : 0.0;
  QuadOptions opt;
  opt.tol = tol * 0.5;
  opt.max_panel_width = wpw;
  auto kern = [&](double t) {
    return shift_diff(t, t2) * std::exp(-p.sigma * t);
  };
  const QuadratureResult re = integrate(
      [&](double t) { return kern(t) * std::cos(p.omega * t); }, -T, T, opt);
  const QuadratureResult im = integrate(
      [&](double t) { return -kern(t) * std::sin(p.omega * t); }, -T, T, opt);
  const std::complex<double> direct(re.value, im.value);

  const double budget = 10.0 * (re.err_estimate + im.err_estimate + tol);
  if (std::abs(product - direct) > budget)
    throw ConsistencyError("ep_prime_omega: product and direct transforms disagree");
  return product;
}

double h_omega(double omega, double sigma) {
  if (!(sigma > 0.0 && sigma < 0.5))
    throw DomainError("h_omega: sigma must be in (0, 1/2)");
  return 2.0 * sigma / (sigma * sigma + omega * omega);
}

QuadratureResult g1r(double omega, const WindowParams& w, double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0, 0};
  const double T = window_cutoff(w, tol);
  const double wpw = (omega != 0.0) ? kPi / (2.0 * std::fabs(omega)) : 0.0;
  QuadOptions opt;
  opt.tol = tol;
  opt.max_panel_width = wpw;
  auto f = [&](double t) {
    const double b = shift_diff(t + w.t0, w.t2) * std::exp(-2.0 * w.sigma * t) -
                     shift_diff(t - w.t0, w.t2);
    return b * std::cos(omega * t);
  };
  return integrate(f, -T, 0.0, opt);
}

QuadratureResult gr(double omega, const WindowParams& w, double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0, 0};
  WindowParams neg = w;
  neg.t0 = -w.t0;
  const double ap = std::exp(-2.0 * w.sigma * w.t0);
  const double am = std::exp(2.0 * w.sigma * w.t0);
  const QuadratureResult r1 = g1r(omega, w, tol / (2.0 * std::max(ap, am)));
  const QuadratureResult r2 = g1r(omega, neg, tol / (2.0 * std::max(ap, am)));
  return {ap * r1.value + am * r2.value,
          ap * r1.err_estimate + am * r2.err_estimate, r1.panels + r2.panels};
}

std::complex<double> f_omega(double omega, const WindowParams& w, double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0};
  const StripPoint p{w.sigma, omega};
  const std::complex<double> epp = ep_prime_omega(p, w.t2, tol);
  const std::complex<double> iwt(0.0, omega * w.t0);
  return epp * (std::exp(-w.sigma * w.t0) * std::exp(iwt) +
                std::exp(w.sigma * w.t0) * std::exp(-iwt));
}

namespace {

// Fixed-grid evaluator for GR(omega') used inside the convolution: the
// tau-profile
//   Psi(tau) = e^{-2 s t0} [D(tau+t0) e^{-2 s tau} + Dn(tau-t0)]
//            + e^{+2 s t0} [D(tau-t0) e^{-2 s tau} + Dn(tau+t0)]
// is sampled once on a composite Gauss-Legendre grid whose panel width is a
// half period of the fastest cosine, after which each GR value is a plain
// weighted cosine sum.
class GrProfile {
 public:
  GrProfile(const WindowParams& w, double omega_cap) {
    const double T = window_cutoff(w, 1e-12);
    const double h = kPi / std::max(omega_cap, 8.0);
    const int n = (int)std::ceil(T / h);
    static const double kX[15] = {
        -9.87992518020485377e-01, -9.37273392400705951e-01,
        -8.48206583410427206e-01, -7.24417731360170070e-01,
        -5.70972172608538830e-01, -3.94151347077563385e-01,
        -2.01194093997434514e-01, 0.0,
        2.01194093997434514e-01,  3.94151347077563385e-01,
        5.70972172608538830e-01,  7.24417731360170070e-01,
        8.48206583410427206e-01,  9.37273392400705951e-01,
        9.87992518020485377e-01};
    static const double kW[15] = {
        3.07532419961186465e-02, 7.03660474881080689e-02,
        1.07159220467171773e-01, 1.39570677926153908e-01,
        1.66269205816993781e-01, 1.86161000015561878e-01,
        1.98431485327111246e-01, 2.02578241925560898e-01,
        1.98431485327111246e-01, 1.86161000015561878e-01,
        1.66269205816993781e-01, 1.39570677926153908e-01,
        1.07159220467171773e-01, 7.03660474881080689e-02,
        3.07532419961186465e-02};
    const double ap = std::exp(-2.0 * w.sigma * w.t0);
    const double am = std::exp(2.0 * w.sigma * w.t0);
    nodes_.reserve((size_t)n * 15);
    wpsi_.reserve((size_t)n * 15);
    const double hw = T / n;
    for (int i = 0; i < n; ++i) {
      const double a = -T + i * hw;
      const double c = a + 0.5 * hw;
      for (int j = 0; j < 15; ++j) {
        const double tau = c + 0.5 * hw * kX[j];
        const double tilt = std::exp(-2.0 * w.sigma * tau);
        const double b1 = shift_diff(tau + w.t0, w.t2) * tilt -
                          shift_diff(tau - w.t0, w.t2);
        const double b2 = shift_diff(tau - w.t0, w.t2) * tilt -
                          shift_diff(tau + w.t0, w.t2);
        nodes_.push_back(tau);
        wpsi_.push_back(0.5 * hw * kW[j] * (ap * b1 + am * b2));
      }
    }
  }

  double operator()(double omega) const {
    double s = 0.0;
    for (size_t i = 0; i < nodes_.size(); ++i)
      s += wpsi_[i] * std::cos(omega * nodes_[i]);
    return s;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> wpsi_;
};

}  // namespace

QuadratureResult fr_convolution(double omega, const WindowParams& w,
                                double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0, 0};
  const double s = w.sigma;
  const double aw = std::fabs(omega);

  double cap = std::max(4.0 * aw + 40.0, 120.0);
  GrProfile prof(w, cap);
  // 1/omega'^2 envelope constant, with margin.
  auto envelope = [&](const GrProfile& pr, double edge) {
    double c = 0.0;
    for (double f : {0.6, 0.7, 0.8, 0.9, 1.0}) {
      const double x = f * edge;
      c = std::max(c, std::fabs(pr(x)) * x * x);
    }
    return 2.0 * c;
  };
  double C = envelope(prof, cap);
  // Tail of the outer integral beyond cap: both Lorentzians are below
  // 4/omega'^2 there, so the remainder is below (s/pi) C 8 / (3 cap^3).
  double tail = (s / kPi) * C * 8.0 / (3.0 * cap * cap * cap);
  if (tail > 0.3 * tol) {
    const double need = std::cbrt((s / kPi) * C * 8.0 / (0.9 * tol));
    cap = std::min(std::max(cap, need), 800.0);
    prof = GrProfile(w, cap);
    C = envelope(prof, cap);
    tail = (s / kPi) * C * 8.0 / (3.0 * cap * cap * cap);
  }

  QuadOptions opt;
  opt.tol = 0.5 * tol;
  opt.max_panel_width = 0.4;
  opt.breakpoints = {aw - 3.0 * s, aw, aw + 3.0 * s};
  const QuadratureResult outer = integrate(
      [&](double op) {
        const double l1 = 1.0 / (s * s + (omega - op) * (omega - op));
        const double l2 = 1.0 / (s * s + (omega + op) * (omega + op));
        return prof(op) * (l1 + l2);
      },
      0.0, cap, opt);
  return {(s / kPi) * outer.value, (s / kPi) * outer.err_estimate + tail,
          outer.panels};
}

QuadratureResult gr_partials(double omega, const WindowParams& w,
                             GrPartial which, double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0, 0};
  const double s = w.sigma, t0 = w.t0, t2 = w.t2;
  const double ap = std::exp(-2.0 * s * t0);
  const double am = std::exp(2.0 * s * t0);
  const double T = window_cutoff(w, tol);
  const double wpw = (omega != 0.0) ? kPi / (2.0 * std::fabs(omega)) : 0.0;
  QuadOptions opt;
  opt.tol = tol;
  opt.max_panel_width = wpw;

  auto B1 = [&](double tau) {
    return shift_diff(tau + t0, t2) * std::exp(-2.0 * s * tau) -
           shift_diff(tau - t0, t2);
  };
  auto B2 = [&](double tau) {
    return shift_diff(tau - t0, t2) * std::exp(-2.0 * s * tau) -
           shift_diff(tau + t0, t2);
  };

  switch (which) {
    case GrPartial::domega:
      return integrate(
          [&](double tau) {
            return -tau * (ap * B1(tau) + am * B2(tau)) *
                   std::sin(omega * tau);
          },
          -T, 0.0, opt);
    case GrPartial::domega2:
      return integrate(
          [&](double tau) {
            return -tau * tau * (ap * B1(tau) + am * B2(tau)) *
                   std::cos(omega * tau);
          },
          -T, 0.0, opt);
    case GrPartial::dt0:
      return integrate(
          [&](double tau) {
            const double tilt = std::exp(-2.0 * s * tau);
            const double db1 =
                (de0_dt(tau + t0 - t2) - de0_dt(tau + t0 + t2)) * tilt -
                de0_dt(tau - t0 + t2) + de0_dt(tau - t0 - t2);
            const double db2 =
                (-de0_dt(tau - t0 - t2) + de0_dt(tau - t0 + t2)) * tilt +
                de0_dt(tau + t0 + t2) - de0_dt(tau + t0 - t2);
            const double v = -2.0 * s * ap * B1(tau) + ap * db1 +
                             2.0 * s * am * B2(tau) + am * db2;
            return v * std::cos(omega * tau);
          },
          -T, 0.0, opt);
    case GrPartial::dt2:
      return integrate(
          [&](double tau) {
            const double tilt = std::exp(-2.0 * s * tau);
            const double db1 =
                (-de0_dt(tau + t0 - t2) - de0_dt(tau + t0 + t2)) * tilt +
                de0_dt(tau - t0 + t2) + de0_dt(tau - t0 - t2);
            const double db2 =
                (-de0_dt(tau - t0 - t2) - de0_dt(tau - t0 + t2)) * tilt +
                de0_dt(tau + t0 + t2) + de0_dt(tau + t0 - t2);
            return (ap * db1 + am * db2) * std::cos(omega * tau);
          },
          -T, 0.0, opt);
  }
  throw DomainError("gr_partials: unknown selector");
}

}  // namespace xilab
