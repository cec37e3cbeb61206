#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xilab/claims.hpp"
#include "xilab/types.hpp"

#include <nlohmann/json.hpp>

namespace xilab {

// Suite identifiers accepted in configs and by `verify --suite`.
const std::vector<std::string>& suite_names();

struct RunConfig {
  std::map<std::string, double> tolerances;  // per-suite override
  std::map<std::string, GridSpec> grids;     // per-suite scan grids
  std::string output_dir = "reports";
  std::string format = "json";  // json | csv
  int parallelism = 1;

  static RunConfig defaults();
  static RunConfig from_json(const nlohmann::json& j);  // DomainError on bad
  static RunConfig load_file(const std::string& path);  // IO via runtime_error
  nlohmann::json to_json() const;

  double tol(const std::string& suite) const;    // falls back to defaults
  GridSpec grid(const std::string& suite) const;
};

struct ScanTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // preformatted cells
};

struct ReportDocument {
  std::string tool_version;
  std::string timestamp;  // UTC, meta block only
  RunConfig config;
  std::vector<ClaimResult> claims;
  std::vector<ScanTable> scans;

  int failures() const;
  nlohmann::json body_json() const;  // deterministic part (no meta)
  nlohmann::json to_json() const;
  // Writes <output_dir>/report-<timestamp>-<confighash>.<ext>; returns path.
  std::string write(const std::string& output_dir) const;
};

// Runs the named suite (all suites when empty). Throws DomainError for an
// unknown name. Suites run in a fixed order; with parallelism > 1 they are
// distributed over threads but assembled in the same order.
ReportDocument run_verify(const RunConfig& config,
                          const std::string& suite_filter = "");

// 17-significant-digit shortest form with '.' decimal separator.
std::string format_real(double x);
// RFC-4180 quoting: wraps in quotes only when the cell needs it.
std::string csv_escape(const std::string& cell);
void write_csv(std::ostream& os, const ScanTable& table);

}  // namespace xilab
