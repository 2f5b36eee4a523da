#pragma once

// Seeded experiment runner: one cell per (n, p, D, seed), each producing a
// RunRecord; suites run cells on a worker pool and emit CSV plus a JSON
// sidecar.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "critpoints/series.hpp"

namespace critpoints {

struct Triple {
  int n = 0;
  int p = 0;
  int D = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct RunFlags {
  std::uint32_t field = 65521;
  bool homogeneous = false;
  bool run_fglm = true;
  bool run_density = true;
  std::optional<int> degree_cap;
};

struct ExperimentConfig {
  std::vector<Triple> triples;
  std::vector<std::uint64_t> seeds{0};
  RunFlags flags;
  /// CSV destination; empty means no file.
  std::string output;
  int jobs = 1;
};

/// Throws std::invalid_argument on malformed input or a triple outside
/// 1 <= p <= n-1, D >= 2.
ExperimentConfig parse_config(const std::string& json_text);
std::string config_to_json(const ExperimentConfig& config);
void validate(const ExperimentConfig& config);

enum class RunStatus { kOk, kDegenerate, kDegreeCapExceeded };
std::string status_name(RunStatus s);
RunStatus parse_status(const std::string& s);

struct RunRecord {
  int n = 0;
  int p = 0;
  int D = 0;
  std::uint64_t seed = 0;
  std::uint32_t field = 65521;
  bool homogeneous = false;

  std::int64_t dreg_pred = 0;
  BigInt deg_pred;

  /// Highest step degree; for a capped run, the degree that was refused.
  std::optional<int> dreg_obs;
  std::optional<std::uint64_t> deg_obs;
  /// Percentage of nonzeros in T_n, rounded to 4 decimals.
  std::optional<double> density;
  /// Percentage of nonzeros over all of T_1..T_n, rounded to 4 decimals.
  std::optional<double> density_all;
  std::optional<bool> shape_position;
  std::optional<std::size_t> rational_points;
  /// Every sampled point zeroes I(F,1) and drops the rank of jac(F,1).
  std::optional<bool> rank_deficiency_pass;
  /// A random point of V(F) off the critical locus has full rank p.
  std::optional<bool> negative_control_pass;

  /// Milliseconds, rounded to 3 decimals.
  double gb_ms = 0;
  double fglm_ms = 0;
  RunStatus status = RunStatus::kOk;
};

RunRecord run_instance(const Triple& t, std::uint64_t seed, const RunFlags& flags);

/// Runs every (triple, seed) cell in config order using config.jobs workers.
/// Writes the CSV and its JSON sidecar when config.output is set.
std::vector<RunRecord> run_suite(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "n,p,D,seed,dreg_pred,dreg_obs,deg_pred,deg_obs,density_pct,gb_ms,fglm_ms,status";

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
/// Parses the columns written by write_csv; throws std::invalid_argument.
std::vector<RunRecord> read_csv(std::istream& in);
/// Config echo, version, RNG tag and the full records.
std::string sidecar_json(const ExperimentConfig& config, const std::vector<RunRecord>& records);
/// results.csv -> results.json
std::string sidecar_path(const std::string& csv_path);

/// Published matrix density for a grid point, if there is one.
std::optional<double> reference_density(int n, int p, int D);
inline constexpr double kDensityBand = 0.5;

struct RecordVerdict {
  std::size_t index = 0;
  bool hard_fail = false;
  bool soft_warning = false;
  bool excluded = false;
  std::vector<std::string> notes;
};

struct VerifySummary {
  std::size_t passed = 0;
  std::size_t hard_failures = 0;
  std::size_t soft_warnings = 0;
  std::size_t degenerate = 0;
  std::size_t capped = 0;
  std::vector<RecordVerdict> verdicts;
  bool ok() const { return hard_failures == 0; }
};

VerifySummary verify_report(const std::vector<RunRecord>& records);
void print_summary(std::ostream& out, const std::vector<RunRecord>& records,
                   const VerifySummary& summary);

struct RatioRow {
  long long n;
  long long p;
  long long D;
  double ratio;
};
/// The ten reference (n, p, D) points of the complexity-ratio table.
std::vector<RatioRow> ratio_table();

}  // namespace critpoints
