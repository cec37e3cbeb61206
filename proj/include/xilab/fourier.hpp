#pragma once

#include <complex>

#include "xilab/quadrature.hpp"
#include "xilab/types.hpp"

namespace xilab {

// Throws DomainError unless sigma is strictly inside (0, 1/2). t2 == 0 is
// allowed: every windowed object is identically zero there and the
// operations below return exact zeros.
void validate_window(const WindowParams& w);

// Two-sided transform of E_p: int E0(t) e^{-sigma t} e^{-i omega t} dt.
// Equals xi(1/2 + sigma + i omega).
std::complex<double> ep_omega(const StripPoint& p, double tol = 1e-11);

// E'_pw(omega, t2) = ep_omega(omega) (e^{-sigma t2} e^{-i omega t2}
//                                     - e^{sigma t2} e^{i omega t2}).
// Computed both from this product and as the direct transform of
// [E0(t-t2) - E0(t+t2)] e^{-sigma t}; throws ConsistencyError if the two
// disagree beyond 10x the combined estimates. Returns the product value.
std::complex<double> ep_prime_omega(const StripPoint& p, double t2,
                                    double tol = 1e-10);

// H(omega) = 2 sigma / (sigma^2 + omega^2), sigma in (0, 1/2).
double h_omega(double omega, double sigma);

// G1R(omega, t2, t0) =
//   int_{-inf}^0 [D(t+t0, t2) e^{-2 sigma t} + Dn(t-t0, t2)] cos(omega t) dt
// with D = e0_shift_diff and Dn = e0n_shift_diff.
QuadratureResult g1r(double omega, const WindowParams& w, double tol = 1e-10);

// GR = e^{-2 sigma t0} G1R(omega, t2, t0) + e^{2 sigma t0} G1R(omega, t2, -t0).
// Even in omega and in t0.
QuadratureResult gr(double omega, const WindowParams& w, double tol = 1e-10);

// F(omega) = ep_prime_omega(omega, t2) (e^{-sigma t0} e^{i omega t0}
//                                       + e^{sigma t0} e^{-i omega t0}).
std::complex<double> f_omega(double omega, const WindowParams& w,
                             double tol = 1e-10);

// (sigma/pi) int_0^inf GR(w') [1/(s^2+(w-w')^2) + 1/(s^2+(w+w')^2)] dw'.
// Matches Re f_omega; the outer integral is truncated where the 1/w'^2
// envelope of GR makes the certified tail smaller than tol, and the tail
// bound is folded into err_estimate.
QuadratureResult fr_convolution(double omega, const WindowParams& w,
                                double tol = 1e-7);

enum class GrPartial { domega, domega2, dt0, dt2 };

// Analytic partial derivatives of GR as explicit quadratures (differentiated
// under the integral sign); cross-checked against finite differences of gr
// in the test suite.
QuadratureResult gr_partials(double omega, const WindowParams& w,
                             GrPartial which, double tol = 1e-9);

}  // namespace xilab
