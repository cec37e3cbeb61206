#pragma once

#include <array>
#include <optional>
#include <vector>

#include "xilab/types.hpp"

namespace xilab {

struct PathPoint {
  double t0 = 0.0;
  double t2 = 0.0;
};

struct StepControl {
  double max_step = 0.01;     // parameter-space step along the path
  double min_step = 1e-5;     // halving floor before declaring the branch lost
  double bracket_tol = 1e-9;  // omega bracket width at each corrector solve
  double slope_floor = 1e-6;  // |dGR/domega| below this flags degeneracy
};

struct ContinuationResult {
  std::vector<CrossingRecord> records;
  bool branch_lost = false;
  PathPoint lost_at{};  // valid when branch_lost
};

// Scan (omega_floor, omega_max] in steps of `step` for the first sign change
// of GR, then bisect to bracket width < tol. Returns nullopt when GR is
// identically zero (t2 == 0) or no sign change is found on the range --
// a legitimate outcome that callers report as data.
std::optional<CrossingRecord> first_crossing(const WindowParams& w,
                                             double omega_max = 50.0,
                                             double step = 0.05,
                                             double tol = 1e-9,
                                             double omega_floor = 1e-3);

// Predictor/corrector continuation of omega_z along a polyline in (t0, t2)
// space. The corrector looks for a sign change in a trust window around the
// linear prediction and halves the parameter step on failure.
ContinuationResult continue_crossing(const WindowParams& w0,
                                     const std::vector<PathPoint>& path,
                                     const StepControl& sc = {});

// Bisection on the product omega_z(2 t0, t0) * t0 - pi/2 along the ray
// t2 = 2 t0. Returns (t0c, omega_zc) when the product brackets pi/2 on the
// range; otherwise nullopt, with the sampled product curve written to
// *product_curve (columns t0, product) when provided.
std::optional<std::pair<double, double>> solve_quarter_period(
    double sigma, std::pair<double, double> t0_range, double tol = 1e-8,
    std::vector<std::array<double, 2>>* product_curve = nullptr);

// Half-line decomposition term:
//   podd(omega, t2, t0) = cos(omega t0) I_c + sin(omega t0) I_s
//     + e^{2 sigma t0} [cos(omega t0) J_c + sin(omega t0) J_s]
// with I_* = int_{-inf}^{t0} D(tau, t2) e^{-2 sigma tau} cos/sin(omega tau)
// and J_* the same with Dn(tau, t2) and no tilt. Satisfies
// podd(omega, t0) + podd(omega, -t0) = gr(omega) pointwise.
QuadratureResult podd(double omega, const WindowParams& w, double tol = 1e-10);

}  // namespace xilab
