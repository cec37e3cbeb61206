#include "xilab/zeros.hpp"

#include <cmath>

#include "xilab/fourier.hpp"
#include "xilab/quadrature.hpp"
#include "xilab/theta.hpp"

namespace xilab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGrTol = 1e-12;

double gr_val(const WindowParams& w, double omega) {
  return gr(omega, w, kGrTol).value;
}

// Bisect a sign change of GR(omega) inside [lo, hi] down to width < tol.
CrossingRecord bisect_crossing(const WindowParams& w, double lo, double hi,
                               double flo, double tol, double slope_floor) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = gr_val(w, mid);
    if (fm == 0.0) {
      lo = mid - 0.25 * tol;
      hi = mid + 0.25 * tol;
      break;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  CrossingRecord rec;
  rec.sigma = w.sigma;
  rec.t2 = w.t2;
  rec.t0 = w.t0;
  rec.omega_z = 0.5 * (lo + hi);
  rec.bracket = {lo, hi};
  rec.slope = gr_partials(rec.omega_z, w, GrPartial::domega).value;
  rec.degenerate = std::fabs(rec.slope) < slope_floor;
  return rec;
}

// Local corrector: look for a sign change of GR within [center-r, center+r].
std::optional<CrossingRecord> crossing_near(const WindowParams& w,
                                            double center, double r,
                                            double tol, double slope_floor,
                                            double omega_floor) {
  const int n = 16;
  const double lo = std::max(omega_floor, center - r);
  const double hi = center + r;
  if (!(hi > lo)) return std::nullopt;
  double prev_x = lo, prev_f = gr_val(w, lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double f = gr_val(w, x);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      return bisect_crossing(w, prev_x, x, prev_f, tol, slope_floor);
    }
    prev_x = x;
    prev_f = f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CrossingRecord> first_crossing(const WindowParams& w,
                                             double omega_max, double step,
                                             double tol, double omega_floor) {
  validate_window(w);
  if (w.t2 == 0.0) return std::nullopt;
  if (!(step > 0.0 && omega_max > omega_floor))
    throw DomainError("first_crossing: bad scan range");
  double prev_x = omega_floor;
  double prev_f = gr_val(w, prev_x);
  for (double x = omega_floor + step; x <= omega_max + 0.5 * step; x += step) {
    const double f = gr_val(w, x);
    if (prev_f * f < 0.0) {
      CrossingRecord rec = bisect_crossing(w, prev_x, x, prev_f, tol, 1e-6);
      // Extra sign changes hidden inside the same scan step mean the grid
      // was too coarse for this window.
      int changes = 0;
      double px = prev_x, pf = prev_f;
      for (int i = 1; i <= 8; ++i) {
        const double xx = prev_x + (x - prev_x) * i / 8.0;
        const double ff = gr_val(w, xx);
        if (pf * ff < 0.0) ++changes;
        px = xx;
        pf = ff;
      }
      (void)px;
      rec.step_too_coarse = changes > 1;
      return rec;
    }
    prev_x = x;
    prev_f = f;
  }
  return std::nullopt;
}

ContinuationResult continue_crossing(const WindowParams& w0,
                                     const std::vector<PathPoint>& path,
                                     const StepControl& sc) {
  validate_window(w0);
  ContinuationResult out;
  if (path.empty()) return out;

  WindowParams w = w0;
  w.t0 = path[0].t0;
  w.t2 = path[0].t2;
  auto start = first_crossing(w, 50.0, 0.05, sc.bracket_tol);
  if (!start) {
    out.branch_lost = true;
    out.lost_at = path[0];
    return out;
  }
  out.records.push_back(*start);

  double prev_omega = start->omega_z;
  double prev_prev_omega = start->omega_z;
  for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const PathPoint a = path[seg], b = path[seg + 1];
    const double len = std::hypot(b.t0 - a.t0, b.t2 - a.t2);
    if (len == 0.0) {
      out.records.push_back(out.records.back());
      continue;
    }
    double pos = 0.0;
    double step = std::min(sc.max_step, len);
    while (pos < len - 1e-12) {
      const double next = std::min(len, pos + step);
      const double frac = next / len;
      WindowParams wn = w0;
      wn.t0 = a.t0 + (b.t0 - a.t0) * frac;
      wn.t2 = a.t2 + (b.t2 - a.t2) * frac;
      const double slope_est =
          (prev_omega - prev_prev_omega) / std::max(step, 1e-12);
      const double predicted = prev_omega + slope_est * (next - pos);
      const double trust =
          std::max(4.0 * std::fabs(predicted - prev_omega), 0.1);
      auto rec = crossing_near(wn, predicted, trust, sc.bracket_tol,
                               sc.slope_floor, 1e-3);
      if (!rec) {
        if (step * 0.5 < sc.min_step) {
          out.branch_lost = true;
          out.lost_at = {wn.t0, wn.t2};
          return out;
        }
        step *= 0.5;
        continue;
      }
      out.records.push_back(*rec);
      prev_prev_omega = prev_omega;
      prev_omega = rec->omega_z;
      pos = next;
    }
  }
  return out;
}

std::optional<std::pair<double, double>> solve_quarter_period(
    double sigma, std::pair<double, double> t0_range, double tol,
    std::vector<std::array<double, 2>>* product_curve) {
  if (!(t0_range.second > t0_range.first && t0_range.first > 0.0))
    throw DomainError("solve_quarter_period: need 0 < t0_lo < t0_hi");

  double hint = -1.0;
  auto omega_at = [&](double t0) -> std::optional<double> {
    WindowParams w{sigma, 2.0 * t0, t0};
    if (hint > 0.0) {
      auto rec = crossing_near(w, hint, std::max(0.5, 0.4 * hint), 1e-9,
                               1e-6, 1e-3);
      if (rec) {
        hint = rec->omega_z;
        return rec->omega_z;
      }
    }
    auto rec = first_crossing(w, 50.0, 0.05, 1e-9);
    if (!rec) return std::nullopt;
    hint = rec->omega_z;
    return rec->omega_z;
  };

  const int n = 9;
  double bra = 0.0, brb = 0.0, fa = 0.0;
  bool have_bracket = false;
  double prev_t0 = 0.0, prev_p = 0.0;
  bool have_prev = false;
  for (int i = 0; i < n; ++i) {
    const double t0 =
        t0_range.first + (t0_range.second - t0_range.first) * i / (n - 1);
    const auto oz = omega_at(t0);
    if (!oz) {
      have_prev = false;
      continue;
    }
    const double p = *oz * t0;
    if (product_curve) product_curve->push_back({t0, p});
    if (have_prev && !have_bracket &&
        (prev_p - kPi / 2.0) * (p - kPi / 2.0) < 0.0) {
      bra = prev_t0;
      brb = t0;
      fa = prev_p - kPi / 2.0;
      have_bracket = true;
    }
    prev_t0 = t0;
    prev_p = p;
    have_prev = true;
  }
  if (!have_bracket) return std::nullopt;

  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (bra + brb);
    const auto oz = omega_at(mid);
    if (!oz) return std::nullopt;  // branch lost inside the bracket
    const double fm = *oz * mid - kPi / 2.0;
    if (std::fabs(fm) < tol || brb - bra < 1e-12)
      return std::make_pair(mid, *oz);
    if ((fm > 0.0) == (fa > 0.0)) {
      bra = mid;
      fa = fm;
    } else {
      brb = mid;
    }
  }
  return std::nullopt;
}

QuadratureResult podd(double omega, const WindowParams& w, double tol) {
  validate_window(w);
  if (w.t2 == 0.0) return {0.0, 0.0, 0};
  const double s = w.sigma, t0 = w.t0, t2 = w.t2;
  const double T = e0_tilt_cutoff(1.0, 0.25 * tol * 1e-3) + std::fabs(t2) +
                   std::fabs(t0);
  const double wpw = (omega != 0.0) ? kPi / (2.0 * std::fabs(omega)) : 0.0;
  QuadOptions opt;
  opt.tol = 0.25 * tol / std::max(1.0, std::exp(2.0 * s * t0));
  opt.max_panel_width = wpw;

  auto D = [&](double tau) { return e0_shift_diff(tau, t2); };
  const QuadratureResult ic = integrate(
      [&](double tau) {
        return D(tau) * std::exp(-2.0 * s * tau) * std::cos(omega * tau);
      },
      -T, t0, opt);
  const QuadratureResult is = integrate(
      [&](double tau) {
        return D(tau) * std::exp(-2.0 * s * tau) * std::sin(omega * tau);
      },
      -T, t0, opt);
  const QuadratureResult jc = integrate(
      [&](double tau) { return -D(tau) * std::cos(omega * tau); }, -T, t0,
      opt);
  const QuadratureResult js = integrate(
      [&](double tau) { return -D(tau) * std::sin(omega * tau); }, -T, t0,
      opt);

  const double co = std::cos(omega * t0), si = std::sin(omega * t0);
  const double amp = std::exp(2.0 * s * t0);
  const double value = co * ic.value + si * is.value +
                       amp * (co * jc.value + si * js.value);
  const double err = std::fabs(co) * ic.err_estimate +
                     std::fabs(si) * is.err_estimate +
                     amp * (std::fabs(co) * jc.err_estimate +
                            std::fabs(si) * js.err_estimate);
  return {value, err, ic.panels + is.panels + jc.panels + js.panels};
}

}  // namespace xilab
