#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xilab/fourier.hpp"
#include "xilab/report.hpp"
#include "xilab/theta.hpp"
#include "xilab/types.hpp"
#include "xilab/xi.hpp"
#include "xilab/zeros.hpp"

namespace {

using xilab::format_real;

// Exit-code contract: 0 ok, 1 claim failure, 2 config/domain error,
// 3 I/O error, 4 no initial crossing, 5 quadrature failure.
enum ExitCode {
  kOk = 0,
  kClaimFailure = 1,
  kConfigError = 2,
  kIoError = 3,
  kNoCrossing = 4,
  kQuadFailure = 5,
};

xilab::RunConfig load_config(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("XILAB_CONFIG")) path = env;
  }
  if (path.empty()) return xilab::RunConfig::defaults();
  try {
    return xilab::RunConfig::load_file(path);
  } catch (const xilab::DomainError&) {
    throw;
  } catch (const std::exception& e) {
    // Treat an unreadable config path as a config error, not generic I/O.
    throw xilab::DomainError(e.what());
  }
}

struct Axis {
  double lo = 0.0, hi = 0.0;
  int count = 1;
  std::vector<double> points() const {
    std::vector<double> p;
    if (count <= 1) {
      p.push_back(lo);
      return p;
    }
    for (int i = 0; i < count; ++i)
      p.push_back(lo + (hi - lo) * i / (count - 1));
    return p;
  }
};

void add_axis(CLI::App* cmd, const std::string& name, Axis& ax,
              double def_lo) {
  ax.lo = def_lo;
  ax.hi = def_lo;
  cmd->add_option("--" + name + "-min", ax.lo);
  cmd->add_option("--" + name + "-max", ax.hi);
  cmd->add_option("--" + name + "-count", ax.count)->check(CLI::PositiveNumber);
}

int write_table(const xilab::ScanTable& table, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    xilab::write_csv(std::cout, table);
    return std::cout ? kOk : kIoError;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kIoError;
  }
  xilab::write_csv(os, table);
  if (!os) {
    std::cerr << "error: write failed for " << out_path << "\n";
    return kIoError;
  }
  return kOk;
}

int cmd_verify(const std::string& config_path, const std::string& suite,
               const std::string& output_dir_flag) {
  xilab::RunConfig cfg = load_config(config_path);
  if (!output_dir_flag.empty()) cfg.output_dir = output_dir_flag;
  const xilab::ReportDocument doc = xilab::run_verify(cfg, suite);
  const std::string path = doc.write(cfg.output_dir);
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : doc.claims) {
    const char* st = c.status == xilab::ClaimStatus::pass ? "pass"
                     : c.status == xilab::ClaimStatus::fail ? "FAIL"
                                                            : "info";
    if (c.status == xilab::ClaimStatus::pass) ++pass;
    else if (c.status == xilab::ClaimStatus::fail) ++fail;
    else ++info;
    std::cout << st << "  " << c.claim_id;
    if (c.status == xilab::ClaimStatus::fail && !c.detail.empty())
      std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << "claims: " << pass << " pass, " << fail << " fail, " << info
            << " informational\nreport: " << path << "\n";
  return fail == 0 ? kOk : kClaimFailure;
}

int cmd_scan_gr(const Axis& sig, const Axis& t2, const Axis& t0,
                const Axis& om, double tol, const std::string& out_path) {
  xilab::ScanTable table;
  table.name = "scan_gr";
  table.columns = {"sigma", "t2", "t0", "omega", "G_R", "err_estimate"};
  for (double s : sig.points())
    for (double b : t2.points())
      for (double a : t0.points())
        for (double w : om.points()) {
          const xilab::QuadratureResult r =
              xilab::gr(w, xilab::WindowParams{s, b, a}, tol);
          table.rows.push_back({format_real(s), format_real(b),
                                format_real(a), format_real(w),
                                format_real(r.value),
                                format_real(r.err_estimate)});
        }
  return write_table(table, out_path);
}

int cmd_track(double sigma, double t2, double t0,
              const std::vector<std::string>& points, double max_step,
              double bracket_tol, const std::string& out_path) {
  std::vector<xilab::PathPoint> path = {{t0, t2}};
  for (const auto& p : points) {
    const auto comma = p.find(',');
    if (comma == std::string::npos)
      throw xilab::DomainError("--point expects t0,t2");
    path.push_back({std::stod(p.substr(0, comma)),
                    std::stod(p.substr(comma + 1))});
  }
  xilab::WindowParams w{sigma, t2, t0};
  xilab::StepControl sc;
  sc.max_step = max_step;
  sc.bracket_tol = bracket_tol;
  const xilab::ContinuationResult res = xilab::continue_crossing(w, path, sc);
  if (res.records.empty()) {
    std::cerr << "error: no initial crossing for sigma=" << sigma
              << " t2=" << t2 << " t0=" << t0
              << " on the scanned range omega in (0.001, 50]\n";
    return kNoCrossing;
  }
  xilab::ScanTable table;
  table.name = "track_omega_z";
  table.columns = {"sigma",      "t2",         "t0",
                   "omega_z",    "slope",      "bracket_lo",
                   "bracket_hi", "degenerate", "step_too_coarse"};
  for (const auto& r : res.records)
    table.rows.push_back({format_real(r.sigma), format_real(r.t2),
                          format_real(r.t0), format_real(r.omega_z),
                          format_real(r.slope),
                          format_real(r.bracket.first),
                          format_real(r.bracket.second),
                          r.degenerate ? "1" : "0",
                          r.step_too_coarse ? "1" : "0"});
  if (res.branch_lost)
    table.rows.push_back({"BRANCH_LOST", format_real(res.lost_at.t2),
                          format_real(res.lost_at.t0), "", "", "", "", "",
                          ""});
  return write_table(table, out_path);
}

int cmd_xi_eval(double sigma, double omega, bool have_zeros, double zlo,
                double zhi, double tol, const std::string& format) {
  const bool as_json = format == "json";
  if (have_zeros) {
    const double z = xilab::find_critical_zero(zlo, zhi, tol);
    if (as_json)
      std::cout << nlohmann::json{{"zero", z},
                                  {"bracket", {zlo, zhi}},
                                  {"tolerance", tol}}
                       .dump()
                << "\n";
    else
      std::cout << "zero: " << format_real(z) << " (bracket width < "
                << format_real(tol) << ")\n";
    return kOk;
  }
  if (!(std::fabs(sigma) < 0.5))
    throw xilab::DomainError("sigma must satisfy |sigma| < 1/2");
  const std::complex<double> v =
      xilab::xi_direct(std::complex<double>(0.5 + sigma, omega), tol);
  if (as_json)
    std::cout << nlohmann::json{{"sigma", sigma},
                                {"omega", omega},
                                {"re", v.real()},
                                {"im", v.imag()}}
                     .dump()
              << "\n";
  else
    std::cout << "xi(" << format_real(0.5 + sigma) << " + "
              << format_real(omega) << "i) = " << format_real(v.real())
              << " + " << format_real(v.imag()) << "i\n";
  return kOk;
}

int cmd_print_config(const std::string& config_path) {
  const xilab::RunConfig cfg = load_config(config_path);
  std::cout << cfg.to_json().dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for the theta-kernel xi representation"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "Config file (falls back to $XILAB_CONFIG, then defaults)");

  auto* verify = app.add_subcommand("verify", "Run claim suites");
  std::string suite, output_dir;
  verify->add_option("--suite", suite, "Run a single suite");
  verify->add_option("--output-dir", output_dir, "Report directory override");

  auto* scan = app.add_subcommand("scan-gr", "Tabulate G_R over a grid");
  Axis ax_sigma, ax_t2, ax_t0, ax_omega;
  add_axis(scan, "sigma", ax_sigma, 0.25);
  add_axis(scan, "t2", ax_t2, 1.0);
  add_axis(scan, "t0", ax_t0, 0.5);
  add_axis(scan, "omega", ax_omega, 1.0);
  double scan_tol = 1e-10;
  std::string scan_out = "-";
  scan->add_option("--tol", scan_tol)->check(CLI::PositiveNumber);
  scan->add_option("--out", scan_out, "CSV path ('-' for stdout)");

  auto* track =
      app.add_subcommand("track-omega-z", "Continue omega_z along a path");
  double tr_sigma = 0.25, tr_t2 = 1.0, tr_t0 = 0.5;
  double tr_step = 0.01, tr_tol = 1e-9;
  std::vector<std::string> tr_points;
  std::string track_out = "-";
  track->add_option("--sigma", tr_sigma);
  track->add_option("--t2", tr_t2);
  track->add_option("--t0", tr_t0);
  track->add_option("--point", tr_points,
                    "Path waypoint t0,t2 (repeatable)");
  track->add_option("--max-step", tr_step)->check(CLI::PositiveNumber);
  track->add_option("--tol", tr_tol)->check(CLI::PositiveNumber);
  track->add_option("--out", track_out, "CSV path ('-' for stdout)");

  auto* xieval = app.add_subcommand("xi-eval", "Evaluate xi or locate a zero");
  double xe_sigma = 0.0, xe_omega = 0.0, xe_tol = 1e-9;
  std::vector<double> xe_zeros;
  std::string xe_format = "text";
  xieval->add_option("--sigma", xe_sigma, "Offset from Re s = 1/2");
  xieval->add_option("--omega", xe_omega, "Im s");
  xieval->add_option("--zeros", xe_zeros, "Bracket lo hi on the critical line")
      ->expected(2);
  xieval->add_option("--tol", xe_tol)->check(CLI::PositiveNumber);
  xieval->add_option("--format", xe_format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* printcfg =
      app.add_subcommand("print-config", "Print the effective config");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(config_path, suite, output_dir);
    if (scan->parsed())
      return cmd_scan_gr(ax_sigma, ax_t2, ax_t0, ax_omega, scan_tol,
                         scan_out);
    if (track->parsed())
      return cmd_track(tr_sigma, tr_t2, tr_t0, tr_points, tr_step, tr_tol,
                       track_out);
    if (xieval->parsed())
      return cmd_xi_eval(xe_sigma, xe_omega, !xe_zeros.empty(),
                         xe_zeros.empty() ? 0.0 : xe_zeros[0],
                         xe_zeros.empty() ? 0.0 : xe_zeros[1], xe_tol,
                         xe_format);
    if (printcfg->parsed()) return cmd_print_config(config_path);
  } catch (const xilab::NoSignChangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoCrossing;
  } catch (const xilab::ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kQuadFailure;
  } catch (const xilab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
