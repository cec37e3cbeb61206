#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct CliRun {
  int exit_code;
  std::string output;  // stdout + stderr
};

CliRun run_cli(const std::string& args) {
  const std::string out_path = "cli_test_output.tmp";
  const std::string cmd =
      std::string(XILAB_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("print-config shows the embedded defaults") {
  const CliRun r = run_cli("print-config");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("tolerances") != std::string::npos);
  CHECK(r.output.find("parallelism") != std::string::npos);
}

TEST_CASE("config file loading and the env fallback") {
  {
    std::ofstream f("cli_cfg_ok.json");
    f << "{\"parallelism\": 2}\n";
  }
  CliRun r = run_cli("--config cli_cfg_ok.json print-config");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"parallelism\": 2") != std::string::npos);

  {
    std::ofstream f("cli_cfg_bad.json");
    f << "{not json\n";
  }
  r = run_cli("--config cli_cfg_bad.json print-config");
  CHECK(r.exit_code == 2);

  r = run_cli("--config cli_cfg_missing.json print-config");
  CHECK(r.exit_code == 2);

  setenv("XILAB_CONFIG", "cli_cfg_ok.json", 1);
  r = run_cli("print-config");
  unsetenv("XILAB_CONFIG");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"parallelism\": 2") != std::string::npos);
}

TEST_CASE("xi-eval values, zeros, and the strip bound") {
  CliRun r = run_cli("xi-eval --sigma 0 --omega 0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"re\":0.49712077818831") != std::string::npos);

  r = run_cli("xi-eval --zeros 14 15");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("14.134725") != std::string::npos);

  r = run_cli("xi-eval --zeros 15 16");
  CHECK(r.exit_code == 4);

  r = run_cli("xi-eval --sigma 0.6 --omega 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("scan-gr writes the lexicographic grid") {
  CliRun r = run_cli(
      "scan-gr --t0-min 0.3 --t0-max 0.6 --t0-count 2 "
      "--omega-min 0.5 --omega-max 2 --omega-count 3 --out cli_scan.csv");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_scan.csv");
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 7);  // header + 2*3 rows
  CHECK(lines[0].rfind("sigma,t2,t0,omega,G_R,err_estimate", 0) == 0);
  // t0 varies slower than omega: rows 1..3 share t0=0.3.
  CHECK(lines[1].find(",0.29999999999999999,") != std::string::npos);
  CHECK(lines[3].find(",0.29999999999999999,") != std::string::npos);
  CHECK(lines[4].find(",0.59999999999999998,") != std::string::npos);
}

TEST_CASE("scan-gr with t2 = 0 yields exact zeros") {
  const CliRun r = run_cli(
      "scan-gr --t2-min 0 --omega-min 0.5 --omega-max 1.5 --omega-count 2 "
      "--out cli_scan0.csv");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_scan0.csv");
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    // G_R column (5th) must be exactly 0.
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) pos = line.find(',', pos) + 1;
    CHECK(line.substr(pos, line.find(',', pos) - pos) == "0");
  }
}

TEST_CASE("scan-gr to an unwritable path is an I/O error") {
  const CliRun r = run_cli("scan-gr --out /nonexistent_dir/scan.csv");
  CHECK(r.exit_code == 3);
}

TEST_CASE("track-omega-z constant path and the no-crossing exit") {
  CliRun r = run_cli(
      "track-omega-z --t0 0.5 --t2 1 --point 0.5,1 --point 0.5,1 "
      "--out cli_track.csv");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_track.csv");
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);  // header + 3 identical records
  CHECK(lines[1] == lines[2]);
  CHECK(lines[2] == lines[3]);

  r = run_cli("track-omega-z --t0 0.5 --t2 0");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("no initial crossing") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CliRun r = run_cli("verify --suite identities --output-dir cli_reports");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass") != std::string::npos);
  CHECK(r.output.find("report: cli_reports/report-") != std::string::npos);

  r = run_cli("verify --suite nosuch --output-dir cli_reports");
  CHECK(r.exit_code == 2);

  {
    std::ofstream f("cli_cfg_tight.json");
    f << "{\"tolerances\": {\"identities\": 1e-30}}\n";
  }
  r = run_cli(
      "--config cli_cfg_tight.json verify --suite identities "
      "--output-dir cli_reports");
  CHECK(r.exit_code == 1);
  CHECK(count_lines(r.output) > 2);
}
