// Command-line runner for P-greedy convergence experiments.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pgreedy/errors.hpp"
#include "pgreedy/experiment.hpp"

namespace {

void print_fits(const pgreedy::ExperimentResult& r) {
  std::cout << r.name << ": " << r.trace.rows.size() << " points selected from " << r.num_candidates
            << " candidates (" << pgreedy::to_string(r.trace.termination) << ")\n";
  for (const auto& f : r.fits)
    std::cout << "  " << f.model << " fit: c=" << f.fit.c << " p_or_c3=" << f.fit.rate << " window=["
              << f.fit.window.n_min << "," << f.fit.window.n_max << "] r^2=" << f.fit.r_squared << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P-greedy kernel point selection and convergence-rate experiments"};

  pgreedy::ExperimentConfig config;
  int per_axis = 0;
  std::string fit_window;
  std::string suite_file;
  std::size_t memory_cap_mb = 1024;

  app.add_option("--kernel", config.kernel, "gaussian | wendland-k0 | wendland-k1 | wendland-k2")
      ->capture_default_str();
  app.add_option("--shape", config.shape, "shape parameter epsilon")->capture_default_str();
  app.add_option("--dim", config.dim, "space dimension (1, 2 or 3)")->capture_default_str();
  app.add_option("--per-axis", per_axis, "grid points per axis (default 10000, 114, 28 for d = 1, 2, 3)");
  app.add_option("--tol", config.tol, "tolerance on the squared power function")->capture_default_str();
  app.add_option("--max-n", config.max_n, "maximum number of selected points")->capture_default_str();
  app.add_flag("--record-fill", config.record_fill, "record the fill distance at every iteration");
  app.add_option("--fit-window", fit_window, "fit window lo:hi (1-based, inclusive)");
  app.add_option("--out", config.output_dir, "output directory")->capture_default_str();
  app.add_option("--name", config.name, "artifact file stem");
  app.add_flag("--plots", config.emit_plots, "write SVG plots");
  app.add_option("--memory-cap-mb", memory_cap_mb, "refuse Newton tables larger than this")->capture_default_str();
  app.add_option("--suite", suite_file, "JSON suite file; runs every listed experiment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? pgreedy::kExitSuccess : pgreedy::kExitConfigError;
  }

  config.memory_cap_bytes = memory_cap_mb << 20;
  if (per_axis > 0) config.per_axis = per_axis;
  if (!fit_window.empty()) {
    try {
      config.fit_window = pgreedy::parse_fit_window(fit_window);
    } catch (const pgreedy::ConfigError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return pgreedy::kExitConfigError;
    }
  }

  if (!suite_file.empty()) {
    const auto suite = pgreedy::run_suite(suite_file, config.output_dir);
    for (const auto& r : suite.experiments) {
      if (r.exit_code == pgreedy::kExitSuccess)
        print_fits(r);
      else
        std::cerr << "error: " << (r.name.empty() ? "suite" : r.name) << ": " << r.message << '\n';
    }
    for (const auto& c : suite.comparisons)
      std::cout << c.name << " [" << c.row.model << "] reference " << c.reference << ": " << c.status << '\n';
    return suite.exit_code;
  }

  const auto result = pgreedy::run_experiment(config);
  if (result.exit_code == pgreedy::kExitConfigError) {
    std::cerr << "error: " << result.message << '\n';
    return result.exit_code;
  }
  print_fits(result);
  if (result.exit_code == pgreedy::kExitBreakdown) std::cerr << "numerical breakdown: " << result.message << '\n';
  return result.exit_code;
}
