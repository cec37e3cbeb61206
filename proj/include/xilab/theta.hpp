#pragma once

#include "xilab/types.hpp"

namespace xilab {

// Jacobi theta sum w(x) = sum_{n>=1} exp(-pi n^2 x), x > 0.
TruncatedSum theta_w(double x, double tol);

// (1 + 2 w(x)) - x^{-1/2} (1 + 2 w(1/x)); zero up to rounding for all x > 0.
double jacobi_identity_residual(double x);

// Theta kernel
//   E0(t) = sum_{n>=1} [4 pi^2 n^4 e^{4t} - 6 pi n^2 e^{2t}] e^{-pi n^2 e^{2t}} e^{t/2}.
// Even in t; negative t is evaluated at |t| (the literal one-sided series is
// numerically useless for t << 0, see e0_raw for the region where it can be
// summed directly). For |t| beyond ~2.7 the value underflows double range and
// 0.0 is returned; use e0_log there.
TruncatedSum e0(double t, double tol = 1e-15);

// Literal term-by-term sum of the series above without the evenness fold.
// Converges within the 200-term cap for t >= -2.1 or so; evaluating it at
// moderately negative t and comparing against e0(|t|) exercises the theta
// functional equation numerically.
TruncatedSum e0_raw(double t, double tol = 1e-15);

// log E0(t), stable for large |t| where e0 underflows (dominant-term form
// with a certified-negligible correction).
double e0_log(double t);

// d/dt log E0(t). Series ratio near the origin, dominant-term closed form
// for |t| > 1.5 where the ratio would underflow.
double e0_log_deriv(double t);

// E_p(t) = E0(t) e^{-sigma t}, |sigma| < 1/2.
double ep(double t, double sigma, double tol = 1e-15);

// Shifted differences: e0_shift_diff = E0(t - t2) - E0(t + t2);
// e0n_shift_diff(t, t2) = e0_shift_diff(-t, t2) = -e0_shift_diff(t, t2).
double e0_shift_diff(double t, double t2, double tol = 1e-15);
double e0n_shift_diff(double t, double t2, double tol = 1e-15);

// Analytically differentiated series for dE0/dt (odd in t).
double de0_dt(double t, double tol = 1e-15);

// sum_{n>=1} e^{-pi n^2} (1 - 4 pi n^2); equals -1/2.
double theta_delta_identity(double tol);

// Smallest c >= 1 such that a certified majorant of E0(c) e^{rate*c} is
// below `bound`. Used to truncate tilted two-sided transforms.
double e0_tilt_cutoff(double rate, double bound);

}  // namespace xilab
