#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scc/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Batch verification driver for the supertrace toolkit"};
  std::string suite = "all";
  std::string config_path, out_path;
  std::string format = "json";
  uint64_t seed = 0;
  bool seed_given = false;
  double tol = 0.0;
  bool tol_given = false;
  int jobs = 1;

  app.add_option("--suite", suite,
                 "Suite to run: signs, xext, cocycles, index, duhamel, comb, "
                 "heat, thm412, main, sphere, or all");
  app.add_option("--seed", seed, "Base RNG seed (overrides the config file)")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--tol", tol,
                 "Tolerance override for the selected suite(s)")
      ->each([&](const std::string&) { tol_given = true; });
  app.add_option("--config", config_path, "Flat key=value config file");
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--format", format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads (never changes results)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    scc::SuiteConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config: " + config_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      cfg = scc::parse_config(buf.str());
    }
    if (seed_given) cfg.seed = seed;
    if (tol_given) {
      if (suite == "all")
        for (const std::string& s : scc::kSuiteNames) cfg.tol[s] = tol;
      else
        cfg.tol[suite] = tol;
    }

    std::vector<scc::ReportRecord> records = scc::run_suite(suite, cfg, jobs);
    std::string body = format == "json" ? scc::report_json(records)
                                        : scc::report_csv(records);
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write: " + out_path);
      out << body;
    }
    for (const scc::ReportRecord& r : records)
      if (!r.pass) {
        std::fprintf(stderr, "FAIL %s/%s residual %.3e tol %.3e\n",
                     r.suite.c_str(), r.case_id.c_str(), r.abs_residual,
                     r.tolerance);
        return 1;
      }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
