#include "xilab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace xilab {
namespace {

// Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kN15 = 15;
constexpr double kX15[kN15] = {
    -9.87992518020485377e-01, -9.37273392400705951e-01,
    -8.48206583410427206e-01, -7.24417731360170070e-01,
    -5.70972172608538830e-01, -3.94151347077563385e-01,
    -2.01194093997434514e-01, 0.0,
    2.01194093997434514e-01,  3.94151347077563385e-01,
    5.70972172608538830e-01,  7.24417731360170070e-01,
    8.48206583410427206e-01,  9.37273392400705951e-01,
    9.87992518020485377e-01};
constexpr double kW15[kN15] = {
    3.07532419961186465e-02, 7.03660474881080689e-02, 1.07159220467171773e-01,
    1.39570677926153908e-01, 1.66269205816993781e-01, 1.86161000015561878e-01,
    1.98431485327111246e-01, 2.02578241925560898e-01, 1.98431485327111246e-01,
    1.86161000015561878e-01, 1.66269205816993781e-01, 1.39570677926153908e-01,
    1.07159220467171773e-01, 7.03660474881080689e-02, 3.07532419961186465e-02};

constexpr int kN7 = 7;
constexpr double kX7[kN7] = {-9.49107912342758486e-01, -7.41531185599394460e-01,
                             -4.05845151377397184e-01, 0.0,
                             4.05845151377397184e-01,  7.41531185599394460e-01,
                             9.49107912342758486e-01};
constexpr double kW7[kN7] = {1.29484966168870647e-01, 2.79705391489276589e-01,
                             3.81830050505118312e-01, 4.17959183673468959e-01,
                             3.81830050505118312e-01, 2.79705391489276589e-01,
                             1.29484966168870647e-01};

struct Panel {
  double a, b, value, err;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double v15 = 0.0, comp = 0.0;
  for (int i = 0; i < kN15; ++i) {
    const double y = kW15[i] * f(c + h * kX15[i]) - comp;
    const double t = v15 + y;
    comp = (t - v15) - y;
    v15 = t;
  }
  v15 *= h;
  double v7 = 0.0;
  for (int i = 0; i < kN7; ++i) v7 += kW7[i] * f(c + h * kX7[i]);
  v7 *= h;
  return {a, b, v15, std::fabs(v15 - v7)};
}

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;  // deterministic tie-break: leftmost first
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadOptions& opt) {
  if (!(b > a)) return {0.0, 0.0, 0};

  std::vector<double> edges;
  edges.push_back(a);
  for (double bp : opt.breakpoints)
    if (bp > a && bp < b) edges.push_back(bp);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  int panels = 0;
  const double span = b - a;
  for (size_t k = 0; k + 1 < edges.size(); ++k) {
    const double lo = edges[k], hi = edges[k + 1];
    int n = std::max(1, (int)std::ceil(opt.initial_panels * (hi - lo) / span));
    if (opt.max_panel_width > 0.0)
      n = std::max(n, (int)std::ceil((hi - lo) / opt.max_panel_width));
    const double w = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      heap.push(eval_panel(f, lo + i * w, (i + 1 == n) ? hi : lo + (i + 1) * w));
      ++panels;
    }
  }

  double err_sum = 0.0;
  {
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> copy = heap;
    while (!copy.empty()) {
      err_sum += copy.top().err;
      copy.pop();
    }
  }

  while (err_sum > opt.tol && panels < opt.panel_cap) {
    Panel worst = heap.top();
    heap.pop();
    if (worst.b - worst.a < 1e-14 * (std::fabs(worst.a) + 1.0)) {
      // cannot refine further; put it back and stop
      heap.push(worst);
      break;
    }
    err_sum -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    err_sum += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  if (err_sum > opt.tol && panels >= opt.panel_cap) {
    throw ToleranceError("integrate: panel cap reached before tolerance");
  }

  // Sum panel values in a fixed (left-to-right) order for determinism.
  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0, comp = 0.0;
  for (const Panel& p : all) {
    const double y = p.value - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
  }
  return {value, err_sum, panels};
}

namespace {

// Walk outward from `from` in direction dir until |f| stays below thresh
// on a whole probe segment. Returns the far edge of that segment.
double find_cutoff(const std::function<double(double)>& f, double from,
                   double dir, double thresh) {
  const double step = 2.0;
  double edge = from;
  for (int k = 0; k < 100; ++k) {
    const double lo = edge + dir * step;
    double peak = 0.0;
    for (int i = 0; i <= 6; ++i) {
      const double t = edge + dir * step * i / 6.0;
      peak = std::max(peak, std::fabs(f(t)));
    }
    if (peak < thresh) return lo;
    edge = lo;
  }
  return edge;
}

}  // namespace

QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    double max_panel_width) {
  const double inf = std::numeric_limits<double>::infinity();
  const double thresh = tol * 1e-3;
  double lo = a, hi = b;
  if (a == -inf) {
    const double ref = (b == inf) ? 0.0 : std::min(b, 0.0);
    lo = find_cutoff(f, ref, -1.0, thresh);
  }
  if (b == inf) {
    const double ref = (a == -inf) ? 0.0 : std::max(a, 0.0);
    hi = find_cutoff(f, ref, +1.0, thresh);
  }
  QuadOptions opt;
  opt.tol = tol;
  opt.max_panel_width = max_panel_width;
  return integrate(f, lo, hi, opt);
}

}  // namespace xilab
