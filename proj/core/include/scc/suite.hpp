#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scc/linalg.hpp"

namespace scc {

/// Batch-driver configuration.  Parsed from a flat key=value file; unknown
/// keys are rejected.  Grids are comma-separated doubles.
struct SuiteConfig {
  uint64_t seed = 1;
  int n_max = 4;  // chain-degree cap for heat/thm412 cases, <= 6
  int pdim = 2, qdim = 2;
  int k = 2;  // exterior generators of the matrix model
  std::vector<double> t_grid{0.5, 1.0, 2.0};
  std::vector<double> s_grid{0.0, 0.4, 0.8};
  std::vector<double> st_grid{0.25, 0.5, 0.75, 1.0, 1.25};
  std::map<std::string, double> tol;  // per-suite overrides

  /// Override if present, otherwise the built-in per-suite default.
  double tol_for(const std::string& suite) const;
};

/// Throws std::invalid_argument on non-positive tolerances, n_max > 6, bad
/// dims, or odd k.
void validate_config(const SuiteConfig& cfg);

/// key=value per line; '#' starts a comment.  Keys: seed, n_max, p, q, k,
/// t_grid, s_grid, st_grid, tol.<suite>.
SuiteConfig parse_config(const std::string& text);

struct ReportRecord {
  std::string suite;
  std::string case_id;
  cx computed{};
  cx reference{};
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // abs / max(1, |reference|)
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

extern const std::vector<std::string> kSuiteNames;  // excludes "all"

/// Runs one suite (or "all").  Deterministic for a given config: every case
/// draws from Rng(seed, case_id), so the jobs count never changes results.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<ReportRecord> run_suite(const std::string& name,
                                    const SuiteConfig& cfg, int jobs = 1);

/// Serialization with a stable field order; see README for the schema.
std::string report_json(const std::vector<ReportRecord>& records);
std::string report_csv(const std::vector<ReportRecord>& records);

/// Inverse of report_csv (round-trip checked in the tests).
std::vector<ReportRecord> parse_csv(const std::string& text);

}  // namespace scc
