#include "xilab/report.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "xilab/fourier.hpp"
#include "xilab/theta.hpp"
#include "xilab/xi.hpp"
#include "xilab/zeros.hpp"

namespace xilab {
namespace {

using json = nlohmann::json;

std::string fmtd(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

ClaimResult value_claim(const std::string& id, double measured,
                        double expected, double tol,
                        const std::string& detail = "") {
  ClaimResult c;
  c.claim_id = id;
  c.measured = measured;
  c.expected = expected;
  c.tolerance = tol;
  c.status = std::fabs(measured - expected) <= tol ? ClaimStatus::pass
                                                   : ClaimStatus::fail;
  c.detail = detail;
  return c;
}

ClaimResult sign_claim(const std::string& id, double measured,
                       bool want_positive, double margin = 0.0,
                       const std::string& detail = "") {
  ClaimResult c;
  c.claim_id = id;
  c.measured = measured;
  c.expected = want_positive ? 1.0 : -1.0;
  c.tolerance = margin;
  const bool ok =
      want_positive ? measured > margin : measured < -margin;
  c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
  c.detail = detail;
  return c;
}

// Runs one claim body; any exception becomes a fail with the message as
// detail (this is how a tampered tolerance surfaces as exit 1, not a crash).
void add(std::vector<ClaimResult>& out, const std::string& id,
         const std::function<ClaimResult()>& fn) {
  try {
    out.push_back(fn());
  } catch (const std::exception& e) {
    ClaimResult c;
    c.claim_id = id;
    c.status = ClaimStatus::fail;
    c.detail = e.what();
    out.push_back(c);
  }
}

std::vector<ClaimResult> suite_identities(const RunConfig& cfg) {
  const double tol = cfg.tol("identities");
  std::vector<ClaimResult> out;
  add(out, "theta_delta_identity", [&] {
    return value_claim("theta_delta_identity", theta_delta_identity(tol),
                       -0.5, tol);
  });
  for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const std::string id = fmtd("jacobi_residual_x%g", x);
    add(out, id, [&, x] {
      return value_claim(id, jacobi_identity_residual(x), 0.0, tol);
    });
  }
  return out;
}

std::vector<ClaimResult> suite_theta(const RunConfig& cfg) {
  const double tol = cfg.tol("theta");
  std::vector<ClaimResult> out;
  add(out, "theta_w_at_1", [&] {
    return value_claim("theta_w_at_1", theta_w(1.0, tol).value,
                       0.04321740560665401, tol);
  });
  add(out, "e0_at_0", [&] {
    return value_claim("e0_at_0", e0(0.0).value, 0.8933938009342469, tol);
  });
  add(out, "e0_at_1", [&] {
    return value_claim("e0_at_1", e0(1.0).value, 2.7556278812712675e-7,
                       tol * 1e-6);
  });
  add(out, "e0_positive", [&] {
    // log E0 finite on the grid means E0 > 0 there; the grid covers the
    // region where the double value itself underflows.
    const GridSpec g = cfg.grid("theta");
    double min_log = 1e300;
    for (double t = g.lo; t <= g.hi + 0.5 * g.step; t += g.step)
      min_log = std::min(min_log, e0_log(t));
    return sign_claim("e0_positive", std::isfinite(min_log) ? 1.0 : -1.0,
                      true, 0.0, fmtd("min log E0 on grid = %.6g", min_log));
  });
  add(out, "e0_even", [&] {
    // The one-sided literal series at -t against the folded value at t.
    // Absolute tolerance: the literal series cancels O(1) terms down to
    // the tiny even value, leaving rounding noise near 1e-16.
    double worst = 0.0;
    for (double t = 0.1; t <= 2.0 + 1e-9; t += 0.1) {
      const double a = e0_raw(-t).value, b = e0(t).value;
      worst = std::max(worst, std::fabs(a - b));
    }
    return value_claim("e0_even", worst, 0.0, 1e-13,
                       "max absolute asymmetry of the literal series");
  });
  return out;
}

std::vector<ClaimResult> suite_oracle(const RunConfig& cfg) {
  const double tol = cfg.tol("oracle");
  using cd = std::complex<double>;
  std::vector<ClaimResult> out;
  add(out, "xi_at_0", [&] {
    return value_claim("xi_at_0", xi_direct(cd(0.0, 0.0), tol).real(), 0.5,
                       1e-13);
  });
  add(out, "xi_at_1", [&] {
    return value_claim("xi_at_1", xi_direct(cd(1.0, 0.0), tol).real(), 0.5,
                       1e-13);
  });
  add(out, "xi_at_half", [&] {
    return value_claim("xi_at_half", xi_direct(cd(0.5, 0.0), tol).real(),
                       0.4971207781883141, 1e-12);
  });
  add(out, "xi_functional_residual", [&] {
    double worst = 0.0;
    for (double s : {0.0, -0.2, 0.2, -0.4, 0.4})
      for (double om : {0.0, 2.0, 5.0, 10.0, 20.0})
        worst = std::max(worst,
                         xi_functional_residual(cd(0.5 + s, om)));
    return value_claim("xi_functional_residual", worst, 0.0, 1e-10,
                       "max over the 5x5 strip grid");
  });
  add(out, "xi_zero_1", [&] {
    return value_claim("xi_zero_1", find_critical_zero(14.0, 15.0, 1e-9),
                       14.1347251417346938, 1e-6);
  });
  add(out, "xi_zero_2", [&] {
    return value_claim("xi_zero_2", find_critical_zero(21.0, 22.0, 1e-9),
                       21.0220396387715550, 1e-6);
  });
  add(out, "transform_matches_xi", [&] {
    double worst = 0.0;
    for (double s : {0.0, 0.25})
      for (double om : {0.0, 1.0, 5.0, 10.0}) {
        const cd a = ep_omega(StripPoint{s, om});
        const cd b = xi_direct(cd(0.5 + s, om), tol);
        worst = std::max(worst, std::abs(a - b));
      }
    return value_claim("transform_matches_xi", worst, 0.0, 1e-8,
                       "spot grid; the full acceptance grid runs separately");
  });
  return out;
}

std::vector<ClaimResult> suite_zeros(const RunConfig& cfg) {
  const double tol = cfg.tol("zeros");
  std::vector<ClaimResult> out;
  add(out, "first_crossing_default", [&] {
    WindowParams w;
    auto rec = first_crossing(w, 50.0, 0.05, tol);
    if (!rec) {
      ClaimResult c;
      c.claim_id = "first_crossing_default";
      c.status = ClaimStatus::fail;
      c.detail = "no sign change on (0, 50] for the default window";
      return c;
    }
    const double flo = gr(rec->bracket.first, w, 1e-12).value;
    const double fhi = gr(rec->bracket.second, w, 1e-12).value;
    const bool ok = flo * fhi < 0.0 &&
                    rec->bracket.second - rec->bracket.first < tol &&
                    !rec->step_too_coarse;
    ClaimResult c;
    c.claim_id = "first_crossing_default";
    c.measured = rec->omega_z;
    c.expected = rec->omega_z;
    c.tolerance = tol;
    c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
    c.detail = fmtd("omega_z=%.12g slope=%.6g", rec->omega_z, rec->slope);
    return c;
  });
  add(out, "omega_z_even_in_t0", [&] {
    WindowParams wp, wm;
    wm.t0 = -wm.t0;
    const auto a = first_crossing(wp, 50.0, 0.05, 1e-10);
    const auto b = first_crossing(wm, 50.0, 0.05, 1e-10);
    if (!a || !b) throw ConsistencyError("crossing vanished under t0 -> -t0");
    return value_claim("omega_z_even_in_t0", a->omega_z - b->omega_z, 0.0,
                       1e-8);
  });
  add(out, "no_crossing_t2_zero", [&] {
    WindowParams w;
    w.t2 = 0.0;
    const bool none = !first_crossing(w).has_value();
    return sign_claim("no_crossing_t2_zero", none ? 1.0 : -1.0, true, 0.0,
                      "GR is identically zero at t2 = 0");
  });
  return out;
}

std::vector<ClaimResult> suite_contradiction(const RunConfig& cfg) {
  const double tol = cfg.tol("contradiction");
  std::vector<ClaimResult> out;
  for (double s : {0.05, 0.1, 0.25, 0.4, 0.49})
    for (double t0c : {0.1, 0.25, 0.5, 1.0, 2.0}) {
      const std::string id = fmtd("contradiction_s%g_t0c%g", s, t0c);
      add(out, id, [&, s, t0c, id] {
        const QuadratureResult r = contradiction_integral(s, t0c, tol);
        return sign_claim(id, r.value, true, 10.0 * r.err_estimate,
                          fmtd("value=%.12g err=%.3g", r.value,
                               r.err_estimate));
      });
    }
  add(out, "contradiction_sigma0", [&] {
    return value_claim("contradiction_sigma0",
                       contradiction_integral(0.0, 0.5, tol).value, 0.0,
                       1e-12);
  });
  return out;
}

std::vector<ClaimResult> suite_monotonic(const RunConfig& cfg) {
  const double tol = cfg.tol("monotonic");
  std::vector<ClaimResult> out;
  add(out, "e0_strict_decrease",
      [&] { return strict_decrease_scan(cfg.grid("monotonic")); });
  for (double t0c : {0.5, 1.0}) {
    const std::string id = fmtd("shifted_gap_t0c%g", t0c);
    add(out, id, [&, t0c, id] {
      ClaimResult c = shifted_gap_positivity(t0c, GridSpec{});
      c.claim_id = id;
      return c;
    });
  }
  add(out, "a_zero_at_pi", [&] {
    return value_claim("a_zero_at_pi", a_of_y(3.14159265358979323846).value,
                       0.0, 1e-10);
  });
  add(out, "a_negative_past_pi", [&] {
    double worst = -1e300;
    for (int i = 1; i <= 50; ++i) {
      const double y =
          3.14159265358979323846 + (3.16 - 3.14159265358979323846) * i / 50.0;
      worst = std::max(worst, a_of_y(y).value);
    }
    return sign_claim("a_negative_past_pi", worst, false, 0.0,
                      "max of A(y) over 50 samples in (pi, 3.16]");
  });
  add(out, "a_positive_before_pi", [&] {
    return sign_claim("a_positive_before_pi", a_of_y(2.0).value, true);
  });
  add(out, "da_dy_negative_at_pi", [&] {
    return sign_claim("da_dy_negative_at_pi",
                      da_dy(3.14159265358979323846).value, false);
  });
  add(out, "bound_chain_minus_2352", [&] { return bound_chain_check(1.0); });
  add(out, "quadratic_root_residual", [&] {
    double worst = 0.0;
    for (int n : {1, 2, 3}) {
      const auto [r1, r2] = quadratic_roots(n);
      const double n2 = (double)n * n;
      for (double y : {r1, r2})
        worst = std::max(
            worst, std::fabs(-4.0 * n2 * n2 * y * y + 15.0 * n2 * y - 7.5));
    }
    return value_claim("quadratic_root_residual", worst, 0.0, 1e-10);
  });
  add(out, "de0_dt_bridge", [&] {
    // de0_dt(t)/2 = pi e^{5t/2} A(pi e^{2t}).
    double worst = 0.0;
    for (double t = -1.0; t <= 1.5 + 1e-9; t += 0.25) {
      const double lhs = de0_dt(t) / 2.0;
      const double q = 3.14159265358979323846 * std::exp(2.0 * t);
      const double rhs =
          3.14159265358979323846 * std::exp(2.5 * t) * a_of_y(q, tol).value;
      // Floor keeps the t = 0 point (both sides vanish) meaningful.
      const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-7});
      worst = std::max(worst, std::fabs(lhs - rhs) / scale);
    }
    return value_claim("de0_dt_bridge", worst, 0.0, 1e-8,
                       "max relative gap on t in [-1, 1.5]");
  });
  return out;
}

std::vector<ClaimResult> suite_convolution(const RunConfig& cfg) {
  const double tol = cfg.tol("convolution");
  std::vector<ClaimResult> out;
  WindowParams w;
  for (double om : {0.5, 2.0}) {
    const std::string id = fmtd("convolution_identity_w%g", om);
    add(out, id, [&, om, id] {
      const double lhs = fr_convolution(om, w, tol).value;
      const double rhs = f_omega(om, w, 1e-11).real();
      const double rel =
          std::fabs(lhs - rhs) / std::max(1e-12, std::fabs(rhs));
      return value_claim(id, rel, 0.0, 1e-5,
                         fmtd("conv=%.12g direct=%.12g", lhs, rhs));
    });
  }
  return out;
}

std::vector<ClaimResult> suite_partials(const RunConfig& cfg) {
  const double tol = cfg.tol("partials");
  std::vector<ClaimResult> out;
  WindowParams w;
  const double om = 1.0;
  auto rel = [](double a, double b) {
    return std::fabs(a - b) / std::max(1e-12, std::fabs(b));
  };
  add(out, "partial_domega", [&] {
    const double h = 1e-4;
    const double fd =
        (gr(om + h, w, 1e-12).value - gr(om - h, w, 1e-12).value) / (2 * h);
    const double an = gr_partials(om, w, GrPartial::domega, tol).value;
    return value_claim("partial_domega", rel(an, fd), 0.0, 1e-5,
                       fmtd("analytic=%.12g fd=%.12g", an, fd));
  });
  add(out, "partial_domega2", [&] {
    const double h = 1e-3;
    const double fd = (gr(om + h, w, 1e-12).value -
                       2.0 * gr(om, w, 1e-12).value +
                       gr(om - h, w, 1e-12).value) /
                      (h * h);
    const double an = gr_partials(om, w, GrPartial::domega2, tol).value;
    return value_claim("partial_domega2", rel(an, fd), 0.0, 1e-4,
                       fmtd("analytic=%.12g fd=%.12g", an, fd));
  });
  add(out, "partial_dt0", [&] {
    const double h = 1e-5;
    WindowParams wp = w, wm = w;
    wp.t0 += h;
    wm.t0 -= h;
    const double fd =
        (gr(om, wp, 1e-12).value - gr(om, wm, 1e-12).value) / (2 * h);
    const double an = gr_partials(om, w, GrPartial::dt0, tol).value;
    return value_claim("partial_dt0", rel(an, fd), 0.0, 1e-5,
                       fmtd("analytic=%.12g fd=%.12g", an, fd));
  });
  add(out, "partial_dt2", [&] {
    const double h = 1e-5;
    WindowParams wp = w, wm = w;
    wp.t2 += h;
    wm.t2 -= h;
    const double fd =
        (gr(om, wp, 1e-12).value - gr(om, wm, 1e-12).value) / (2 * h);
    const double an = gr_partials(om, w, GrPartial::dt2, tol).value;
    return value_claim("partial_dt2", rel(an, fd), 0.0, 1e-5,
                       fmtd("analytic=%.12g fd=%.12g", an, fd));
  });
  return out;
}

std::vector<ClaimResult> suite_podd(const RunConfig& cfg) {
  const double tol = cfg.tol("podd");
  std::vector<ClaimResult> out;
  WindowParams w;
  for (double om : {0.7, 1.3, 2.6}) {
    const std::string id = fmtd("podd_decomposition_w%g", om);
    add(out, id, [&, om, id] {
      WindowParams wm = w;
      wm.t0 = -w.t0;
      const double sum = podd(om, w, tol).value + podd(om, wm, tol).value;
      const double g = gr(om, w, 1e-12).value;
      const double relerr =
          std::fabs(sum - g) / std::max(1e-12, std::fabs(g));
      return value_claim(id, relerr, 0.0, 1e-6,
                         fmtd("sum=%.12g gr=%.12g", sum, g));
    });
  }
  return out;
}

std::vector<ClaimResult> suite_falloff(const RunConfig&) {
  std::vector<ClaimResult> out;
  add(out, "e0_falloff_slope", [&] { return falloff_fit({3.0, 8.0}); });
  add(out, "xi_envelope_slope",
      [&] { return xi_envelope_slope({15.0, 40.0}); });
  return out;
}

std::vector<ClaimResult> suite_constants(const RunConfig&) {
  std::vector<ClaimResult> out;
  try {
    for (auto& c : order_constants(0.25, 10.0)) out.push_back(c);
  } catch (const std::exception& e) {
    ClaimResult c;
    c.claim_id = "order_constants";
    c.status = ClaimStatus::fail;
    c.detail = e.what();
    out.push_back(c);
  }
  return out;
}

std::vector<ClaimResult> suite_window(const RunConfig& cfg) {
  const double tol = cfg.tol("window");
  std::vector<ClaimResult> out;
  add(out, "f_at_zero_1_1",
      [&] { return f_at_zero_nonvanishing(0.25, 1.0, 1.0); });
  add(out, "f_at_zero_halved", [&] {
    ClaimResult c = f_at_zero_nonvanishing(0.25, 0.5, 1.0);
    c.claim_id = "f_at_zero_halved";
    return c;
  });
  add(out, "f_at_zero_boundary", [&] {
    ClaimResult c = f_at_zero_nonvanishing(0.25, 0.0, 1.0);
    c.claim_id = "f_at_zero_boundary";
    return c;
  });
  add(out, "g1r_spot", [&] {
    return value_claim("g1r_spot", g1r(1.0, WindowParams{}, tol).value,
                       0.3771389303727197, 1e-9);
  });
  add(out, "gr_spot_1", [&] {
    return value_claim("gr_spot_1", gr(1.0, WindowParams{}, tol).value,
                       -0.3601243475119091, 1e-9);
  });
  add(out, "gr_spot_2", [&] {
    return value_claim("gr_spot_2", gr(2.0, WindowParams{}, tol).value,
                       -0.01349556632505089, 1e-9);
  });
  add(out, "gr_vanishes_t2_zero", [&] {
    WindowParams w;
    w.t2 = 0.0;
    double worst = 0.0;
    for (double om : {0.0, 1.0, 5.0})
      worst = std::max(worst, std::fabs(gr(om, w, tol).value));
    return value_claim("gr_vanishes_t2_zero", worst, 0.0, 0.0,
                       "exact zeros by construction at t2 = 0");
  });
  return out;
}

using SuiteFn = std::vector<ClaimResult> (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"identities", suite_identities},
      {"theta", suite_theta},
      {"oracle", suite_oracle},
      {"zeros", suite_zeros},
      {"contradiction", suite_contradiction},
      {"monotonic", suite_monotonic},
      {"convolution", suite_convolution},
      {"partials", suite_partials},
      {"podd", suite_podd},
      {"falloff", suite_falloff},
      {"constants", suite_constants},
      {"window", suite_window},
  };
  return table;
}

json claim_to_json(const ClaimResult& c) {
  const char* st = c.status == ClaimStatus::pass ? "pass"
                   : c.status == ClaimStatus::fail ? "fail"
                                                   : "informational";
  return json{{"claim_id", c.claim_id}, {"measured", c.measured},
              {"expected", c.expected}, {"tolerance", c.tolerance},
              {"status", st},           {"detail", c.detail}};
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.tolerances = {{"identities", 1e-12}, {"theta", 1e-12},
                  {"oracle", 1e-11},     {"zeros", 1e-9},
                  {"contradiction", 1e-12}, {"monotonic", 1e-14},
                  {"convolution", 1e-7}, {"partials", 1e-9},
                  {"podd", 1e-10},       {"falloff", 1e-10},
                  {"constants", 1e-10},  {"window", 1e-10}};
  c.grids = {{"monotonic", {0.01, 10.0, 0.01}},
             {"theta", {0.01, 10.0, 0.01}}};
  return c;
}

double RunConfig::tol(const std::string& suite) const {
  auto it = tolerances.find(suite);
  if (it != tolerances.end()) return it->second;
  const RunConfig d = defaults();
  return d.tolerances.at(suite);
}

GridSpec RunConfig::grid(const std::string& suite) const {
  auto it = grids.find(suite);
  if (it != grids.end()) return it->second;
  const RunConfig d = defaults();
  auto jt = d.grids.find(suite);
  if (jt == d.grids.end()) throw DomainError("no grid for suite " + suite);
  return jt->second;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c = defaults();
  if (!j.is_object()) throw DomainError("config root must be an object");
  const auto& names = suite_names();
  auto known = [&](const std::string& s) {
    for (const auto& n : names)
      if (n == s) return true;
    return false;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "tolerances") {
      for (auto t = it->begin(); t != it->end(); ++t) {
        if (!known(t.key()))
          throw DomainError("unknown suite in tolerances: " + t.key());
        const double v = t->get<double>();
        if (!(v > 0.0)) throw DomainError("tolerance must be positive");
        c.tolerances[t.key()] = v;
      }
    } else if (key == "grids") {
      for (auto g = it->begin(); g != it->end(); ++g) {
        if (!known(g.key()))
          throw DomainError("unknown suite in grids: " + g.key());
        GridSpec gs;
        gs.lo = g->at("lo").get<double>();
        gs.hi = g->at("hi").get<double>();
        gs.step = g->at("step").get<double>();
        if (!(gs.step > 0.0 && gs.hi > gs.lo))
          throw DomainError("grid needs lo < hi and step > 0");
        c.grids[g.key()] = gs;
      }
    } else if (key == "output_dir") {
      c.output_dir = it->get<std::string>();
    } else if (key == "format") {
      c.format = it->get<std::string>();
      if (c.format != "json" && c.format != "csv")
        throw DomainError("format must be json or csv");
    } else if (key == "parallelism") {
      c.parallelism = it->get<int>();
      if (c.parallelism < 1) throw DomainError("parallelism must be >= 1");
    } else {
      throw DomainError("unknown config key: " + key);
    }
  }
  return c;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
  json tol_j = json::object(), grid_j = json::object();
  for (const auto& [k, v] : tolerances) tol_j[k] = v;
  for (const auto& [k, g] : grids)
    grid_j[k] = json{{"lo", g.lo}, {"hi", g.hi}, {"step", g.step}};
  return json{{"tolerances", tol_j},
              {"grids", grid_j},
              {"output_dir", output_dir},
              {"format", format},
              {"parallelism", parallelism}};
}

int ReportDocument::failures() const {
  int n = 0;
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) ++n;
  return n;
}

nlohmann::json ReportDocument::body_json() const {
  json claims_j = json::array();
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : claims) {
    claims_j.push_back(claim_to_json(c));
    if (c.status == ClaimStatus::pass) ++pass;
    else if (c.status == ClaimStatus::fail) ++fail;
    else ++info;
  }
  json scans_j = json::array();
  for (const auto& s : scans) {
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back(r);
    scans_j.push_back(
        json{{"name", s.name}, {"columns", s.columns}, {"rows", rows}});
  }
  return json{{"config", config.to_json()},
              {"claims", claims_j},
              {"scans", scans_j},
              {"summary", json{{"pass", pass},
                               {"fail", fail},
                               {"informational", info}}}};
}

nlohmann::json ReportDocument::to_json() const {
  return json{
      {"schema", 1},
      {"meta", json{{"timestamp", timestamp}, {"tool_version", tool_version}}},
      {"body", body_json()}};
}

std::string ReportDocument::write(const std::string& output_dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(output_dir);
  const std::string cfg_dump = config.to_json().dump();
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016zx",
                std::hash<std::string>{}(cfg_dump));
  const std::string ext = config.format == "csv" ? "csv" : "json";
  const std::string path =
      output_dir + "/report-" + timestamp + "-" + hash + "." + ext;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  if (config.format == "csv") {
    // Meta header block first (timestamps stay out of the data section).
    out << "# schema=1 timestamp=" << timestamp
        << " tool_version=" << tool_version << "\n";
    ScanTable t;
    t.columns = {"claim_id", "measured", "expected",
                 "tolerance", "status",   "detail"};
    for (const auto& c : claims) {
      const char* st = c.status == ClaimStatus::pass ? "pass"
                       : c.status == ClaimStatus::fail ? "fail"
                                                       : "informational";
      t.rows.push_back({c.claim_id, format_real(c.measured),
                        format_real(c.expected), format_real(c.tolerance),
                        st, c.detail});
    }
    write_csv(out, t);
  } else {
    out << to_json().dump(2) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
  return path;
}

ReportDocument run_verify(const RunConfig& config,
                          const std::string& suite_filter) {
  std::vector<std::pair<std::string, SuiteFn>> selected;
  for (const auto& entry : suite_table())
    if (suite_filter.empty() || entry.first == suite_filter)
      selected.push_back(entry);
  if (selected.empty()) throw DomainError("unknown suite: " + suite_filter);

  std::vector<std::vector<ClaimResult>> results(selected.size());
  const int workers =
      std::max(1, std::min<int>(config.parallelism, (int)selected.size()));
  if (workers == 1) {
    for (size_t i = 0; i < selected.size(); ++i)
      results[i] = selected[i].second(config);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < selected.size();
             i = next.fetch_add(1))
          results[i] = selected[i].second(config);
      });
    for (auto& th : pool) th.join();
  }

  ReportDocument doc;
  doc.tool_version = "0.1.0";
  doc.timestamp = utc_now();
  doc.config = config;
  for (auto& r : results)
    for (auto& c : r) doc.claims.push_back(std::move(c));
  return doc;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const ScanTable& table) {
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(row[i]);
    os << "\r\n";
  }
}

}  // namespace xilab
