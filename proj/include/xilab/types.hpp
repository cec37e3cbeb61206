#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace xilab {

// A partial series sum together with a certified bound on everything that
// was dropped. The bound comes from a geometric majorant of the remaining
// terms, so `value` is within `tail_bound` of the full sum (up to rounding).
struct TruncatedSum {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels = 0;
};

// Point s = 1/2 + sigma + i*omega in the critical strip, |sigma| < 1/2.
struct StripPoint {
  double sigma = 0.0;
  double omega = 0.0;
};

// Window parameters for the shifted/tilted transforms. sigma must lie
// strictly inside (0, 1/2). t2 == 0 makes every windowed object vanish
// identically; the operations return exact zeros in that case.
struct WindowParams {
  double sigma = 0.25;
  double t2 = 1.0;
  double t0 = 0.5;
};

struct CrossingRecord {
  double sigma = 0.0;
  double t2 = 0.0;
  double t0 = 0.0;
  double omega_z = 0.0;
  double slope = 0.0;  // d G_R / d omega at the crossing
  std::pair<double, double> bracket{0.0, 0.0};
  bool degenerate = false;       // |slope| below the configured floor
  bool step_too_coarse = false;  // extra sign changes inside one scan step
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested tolerance cannot be met within the term/panel budget.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSignChangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent evaluations of the same quantity disagree beyond the
// combined error estimates.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xilab
