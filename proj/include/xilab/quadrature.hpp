#pragma once

#include <functional>
#include <vector>

#include "xilab/types.hpp"

namespace xilab {

struct QuadOptions {
  double tol = 1e-10;            // absolute target for the summed estimate
  double max_panel_width = 0.0;  // 0 = no limit; use pi/(2|omega|) for cos/sin kernels
  int panel_cap = 60000;
  int initial_panels = 8;
  // Extra panel boundaries (e.g. a Lorentzian peak); values outside (a,b)
  // are ignored.
  std::vector<double> breakpoints;
};

// Adaptive panel integration on a finite interval. Each panel is evaluated
// with Gauss-Legendre 15 and an embedded order-7 estimate; the worst panel
// is bisected until the summed discrepancy drops below tol. Throws
// ToleranceError at the panel cap.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadOptions& opt);

// Same, but a and b may be +/- infinity. Infinite ends are truncated where
// probing shows |f| < tol * 1e-3 (valid for the super-exponentially decaying
// integrands used throughout this project).
QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    double max_panel_width = 0.0);

}  // namespace xilab
