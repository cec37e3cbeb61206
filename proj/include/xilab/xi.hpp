#pragma once

#include <complex>

#include "xilab/types.hpp"

namespace xilab {

// xi(s) = 1/2 [1 + s(s-1) * int_1^inf (x^{s/2} + x^{(1-s)/2}) w(x) dx/x],
// evaluated in the log substitution x = e^{2u}. Entire in s; the working
// region is |Re s - 1/2| < 1/2 + slack, |Im s| <= 50.
std::complex<double> xi_direct(std::complex<double> s, double tol = 1e-12);

// |xi(s) - xi(1-s)|; zero up to quadrature noise.
double xi_functional_residual(std::complex<double> s);

// Re xi(1/2 + i omega); throws ConsistencyError if the imaginary part is
// not negligible (it must vanish on the critical line).
double xi_critical_line(double omega);

// Bisection for a sign change of xi on the critical line. Returns omega*
// with bracket width < tol. Throws NoSignChangeError if the endpoints have
// the same sign.
double find_critical_zero(double bracket_lo, double bracket_hi, double tol);

}  // namespace xilab
