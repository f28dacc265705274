#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgreedy/greedy.hpp"
#include "pgreedy/rates.hpp"

namespace pgreedy {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitSuccess = 0,
  kExitConfigError = 1,
  kExitBreakdown = 2,
  kExitPartialSuiteFailure = 3,
};

struct ExperimentConfig {
  std::string name;  ///< artifact file stem; derived from kernel and dim when empty
  std::string kernel = "gaussian";
  double shape = 1.0;
  int dim = 1;
  std::optional<int> per_axis;  ///< 10^4, 114, 28 for dim 1, 2, 3 when unset
  double tol = 1e-15;           ///< on the squared power function
  std::size_t max_n = 1000;
  bool record_fill = false;
  std::optional<FitWindow> fit_window;
  std::filesystem::path output_dir = "out";
  bool emit_plots = false;
  std::size_t memory_cap_bytes = std::size_t{1} << 30;

  int resolved_per_axis() const;
  std::string resolved_name() const;
};

int default_per_axis(int dim);

/// Parses "lo:hi" (1-based, inclusive).
FitWindow parse_fit_window(std::string_view text);

struct ExperimentResult {
  int exit_code = kExitSuccess;
  std::string message;
  std::string name;
  KernelSpec kernel;
  std::size_t num_candidates = 0;
  GreedyTrace trace;
  std::vector<SummaryRow> fits;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs P-greedy on the discretized unit ball and writes
/// <name>.trace.csv, <name>.meta.json, <name>.summary.csv and, with
/// emit_plots, <name>.power.svg (+ <name>.fill.svg when fill is recorded).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Trace CSV: n,selected_index,x1[,x2[,x3]],max_power,fill_distance
void write_trace_csv(std::ostream& out, const GreedyTrace& trace);

/// Comparison of one fit against its reference value.
struct SuiteComparison {
  std::string name;
  SummaryRow row;
  std::string reference;  ///< human-readable reference value
  std::string status;     ///< within | outside | failed: <reason>
};

struct SuiteResult {
  int exit_code = kExitSuccess;
  std::vector<ExperimentResult> experiments;
  std::vector<SuiteComparison> comparisons;
  std::size_t failures = 0;
};

/// Reads {"experiments": [ {name, kernel, shape, dim, per_axis, tol, max_n,
/// record_fill, fit_window, plots}, ... ]}. Each entry writes into
/// output_dir/<name>/; suite_summary.csv goes to output_dir.
std::vector<ExperimentConfig> load_suite(const std::filesystem::path& suite_file,
                                         const std::filesystem::path& output_dir);

SuiteResult run_suite(const std::filesystem::path& suite_file, const std::filesystem::path& output_dir);

/// Compares fits with reference estimates: Gaussian c3 within 35%, Wendland
/// exponent within 0.3 of -beta/d and at most -beta/d + 0.25, fill exponent
/// within 0.15 of -1/d.
std::vector<SuiteComparison> compare_with_reference(const ExperimentResult& result);

}  // namespace pgreedy
