#include "pgreedy/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "pgreedy/errors.hpp"
#include "pgreedy/geometry.hpp"
#include "pgreedy/svg_plot.hpp"

namespace pgreedy {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kTieBreak = "lowest candidate index among equal maxima";
constexpr const char* kBetaMapping = "wendland k = smallest k with k + (d+1)/2 >= beta";

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

std::string beta_label(const KernelSpec& spec) {
  if (spec.family == KernelFamily::Gaussian) return "inf";
  return std::to_string(nominal_beta(spec));
}

json kernel_metadata(const KernelSpec& spec) {
  json k = {{"id", spec.id()}, {"shape", spec.shape}, {"dim", spec.dim}};
  const auto s = spec.smoothness();
  if (s.infinite) {
    k["smoothness"] = "infinite";
  } else {
    k["smoothness"] = "finite";
    k["native_sobolev_order"] = s.beta;
    k["nominal_beta"] = nominal_beta(spec);
    k["beta_mapping"] = kBetaMapping;
  }
  return k;
}

json fit_metadata(const SummaryRow& row) {
  return {{"model", row.model},
          {"c", row.fit.c},
          {"p_or_c3", row.fit.rate},
          {"window", {row.fit.window.n_min, row.fit.window.n_max}},
          {"r_squared", row.fit.r_squared}};
}

std::vector<SummaryRow> compute_fits(const ExperimentConfig& config, const KernelSpec& spec, const GreedyTrace& trace,
                                     json& notes) {
  std::vector<SummaryRow> fits;
  const FitWindow window = config.fit_window.value_or(default_window(trace));
  try {
    if (spec.family == KernelFamily::Gaussian)
      fits.push_back({spec.id(), spec.dim, beta_label(spec), "exponential", fit_exponential(trace, spec.dim, window)});
    else
      fits.push_back({spec.id(), spec.dim, beta_label(spec), "algebraic", fit_algebraic(trace, window)});
  } catch (const std::exception& e) {
    notes.push_back(fmt::format("power fit skipped: {}", e.what()));
  }
  if (config.record_fill) {
    try {
      fits.push_back({spec.id(), spec.dim, beta_label(spec), "fill", fit_fill_decay(trace, window)});
    } catch (const std::exception& e) {
      notes.push_back(fmt::format("fill fit skipped: {}", e.what()));
    }
  }
  return fits;
}

void write_plots(const ExperimentConfig& config, const KernelSpec& spec, const GreedyTrace& trace,
                 const std::vector<SummaryRow>& fits, const fs::path& stem, std::vector<fs::path>& artifacts) {
  if (trace.rows.empty()) return;
  std::vector<double> n, power, fill;
  for (const auto& r : trace.rows) {
    n.push_back(static_cast<double>(r.n));
    power.push_back(r.max_power);
    if (r.fill_distance) fill.push_back(*r.fill_distance);
  }
  const FitWindow window = config.fit_window.value_or(default_window(trace));
  auto window_span = [&](const std::vector<double>& v) {
    const std::size_t lo = std::min(window.n_min, v.size()) - (window.n_min > 0 ? 1 : 0);
    const std::size_t hi = std::min(window.n_max, v.size());
    return std::span<const double>(v.data() + lo, hi > lo ? hi - lo : 0);
  };

  const auto smooth = spec.smoothness();
  std::vector<PlotSeries> series;
  PlotAxes axes;
  axes.y_label = "max power function";
  if (smooth.infinite) {
    axes.title = fmt::format("{} d={}: power function decay", spec.id(), spec.dim);
    for (const auto& f : fits) {
      if (f.model != "exponential") continue;
      series.push_back({n, theoretical_curve(smooth, spec.dim, {f.fit.c, f.fit.rate}, n), "red", true,
                        fmt::format("{:.3g} exp(-{:.3g} n^(1/{}))", f.fit.c, f.fit.rate, spec.dim)});
    }
  } else {
    axes.log_x = true;
    const int beta = nominal_beta(spec);
    axes.title = fmt::format("{} d={} (beta={}): power function decay", spec.id(), spec.dim, beta);
    const auto fit_n = window_span(n);
    const auto fit_p = window_span(power);
    if (fit_n.size() >= 1) {
      for (auto [kind, color, label] : {std::tuple{CurveKind::Theoretical, "red", "n^(-beta/d+1/2)"},
                                        std::tuple{CurveKind::Improved, "gold", "n^(-beta/d)"}}) {
        const double c = fit_prefactor(fit_n, fit_p, algebraic_exponent(beta, spec.dim, kind));
        series.push_back({n, theoretical_curve(SmoothnessClass::finite(beta), spec.dim, {c, 1.0}, n, kind), color, true,
                          fmt::format("{:.3g} {}", c, label)});
      }
    }
  }
  series.push_back({n, power, "blue", false, "P-greedy"});
  const fs::path power_path = stem.string() + ".power.svg";
  auto out = open_output(power_path);
  write_svg_plot(out, axes, series);
  artifacts.push_back(power_path);

  if (fill.size() == n.size()) {
    PlotAxes fill_axes{fmt::format("{} d={}: fill distance", spec.id(), spec.dim), "n", "fill distance", true, true};
    std::vector<PlotSeries> fill_series;
    const auto fit_n = window_span(n);
    const auto fit_h = window_span(fill);
    if (!fit_n.empty()) {
      const double e = -1.0 / spec.dim;
      const double c = fit_prefactor(fit_n, fit_h, e);
      std::vector<double> curve;
      for (double v : n) curve.push_back(c * std::pow(v, e));
      fill_series.push_back({n, curve, "red", true, fmt::format("{:.3g} n^(-1/{})", c, spec.dim)});
    }
    fill_series.push_back({n, fill, "blue", false, "P-greedy"});
    const fs::path fill_path = stem.string() + ".fill.svg";
    auto fout = open_output(fill_path);
    write_svg_plot(fout, fill_axes, fill_series);
    artifacts.push_back(fill_path);
  }
}

ExperimentConfig config_from_json(const json& j, const fs::path& output_dir, std::size_t index) {
  ExperimentConfig c;
  c.kernel = j.value("kernel", std::string{});
  c.shape = j.value("shape", 1.0);
  c.dim = j.value("dim", 1);
  if (j.contains("per_axis")) c.per_axis = j.at("per_axis").get<int>();
  c.tol = j.value("tol", 1e-15);
  c.max_n = j.value("max_n", std::size_t{1000});
  c.record_fill = j.value("record_fill", false);
  if (j.contains("fit_window")) c.fit_window = parse_fit_window(j.at("fit_window").get<std::string>());
  c.emit_plots = j.value("plots", false);
  c.name = j.value("name", fmt::format("experiment-{}", index));
  c.output_dir = output_dir / c.name;
  return c;
}

}  // namespace

int default_per_axis(int dim) {
  switch (dim) {
    case 1: return 10000;
    case 2: return 114;
    case 3: return 28;
    default: throw ConfigError("dim must be 1, 2 or 3");
  }
}

int ExperimentConfig::resolved_per_axis() const { return per_axis.value_or(default_per_axis(dim)); }

std::string ExperimentConfig::resolved_name() const {
  return name.empty() ? fmt::format("{}-d{}", kernel, dim) : name;
}

FitWindow parse_fit_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError("fit window must be lo:hi");
  FitWindow w;
  try {
    std::size_t used = 0;
    const std::string lo(text.substr(0, colon)), hi(text.substr(colon + 1));
    w.n_min = std::stoul(lo, &used);
    if (used != lo.size()) throw ConfigError("bad fit window");
    w.n_max = std::stoul(hi, &used);
    if (used != hi.size()) throw ConfigError("bad fit window");
  } catch (const std::logic_error&) {
    throw ConfigError("fit window must be lo:hi with positive integers");
  }
  if (w.n_min < 1 || w.n_max < w.n_min) throw ConfigError("fit window must satisfy 1 <= lo <= hi");
  return w;
}

void write_trace_csv(std::ostream& out, const GreedyTrace& trace) {
  out << "n,selected_index";
  for (int k = 1; k <= trace.kernel.dim; ++k) out << ",x" << k;
  out << ",max_power,fill_distance\n";
  for (const auto& r : trace.rows) {
    out << r.n << ',' << r.selected_index;
    for (double x : r.selected_point) out << fmt::format(",{:.17g}", x);
    out << fmt::format(",{:.17g},", r.max_power);
    if (r.fill_distance) out << fmt::format("{:.17g}", *r.fill_distance);
    out << '\n';
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  result.name = config.resolved_name();
  try {
    if (config.dim < 1 || config.dim > 3) throw ConfigError("dim must be 1, 2 or 3");
    try {
      result.kernel = KernelSpec::from_id(config.kernel, config.shape, config.dim);
    } catch (const InputError& e) {
      throw ConfigError(e.what());
    }
    const StopCriteria stop{config.tol, config.max_n};
    if (!(stop.tol_sq > 0.0) || stop.max_n < 1) throw ConfigError("tol must be positive and max_n at least 1");
    const int per_axis = config.resolved_per_axis();
    if (per_axis < 2) throw ConfigError("per_axis must be at least 2");

    const double grid_bound = std::pow(static_cast<double>(per_axis), config.dim);
    const auto cap = static_cast<double>(config.memory_cap_bytes);
    if (grid_bound * 8.0 * config.dim > cap) throw ConfigError("candidate grid exceeds the memory cap");
    const PointSet candidates = discretize_ball(config.dim, per_axis);
    result.num_candidates = candidates.size();
    if (candidates.empty()) throw ConfigError("grid has no points inside the unit ball");
    const double table_bytes =
        8.0 * static_cast<double>(candidates.size()) * static_cast<double>(std::min(stop.max_n, candidates.size()));
    if (table_bytes > cap)
      throw ConfigError(fmt::format("Newton table needs {:.0f} bytes, above the memory cap of {:.0f}", table_bytes, cap));

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec || !fs::is_directory(config.output_dir))
      throw ConfigError("cannot create output directory " + config.output_dir.string());

    auto run = run_pgreedy(result.kernel, candidates, stop, {config.record_fill, false});
    result.trace = std::move(run.trace);
    const auto& trace = result.trace;

    json notes = json::array();
    if (!trace.note.empty()) notes.push_back(trace.note);
    result.fits = compute_fits(config, result.kernel, trace, notes);

    const fs::path stem = config.output_dir / result.name;
    {
      const fs::path p = stem.string() + ".trace.csv";
      auto out = open_output(p);
      write_trace_csv(out, trace);
      result.artifacts.push_back(p);
    }
    {
      const fs::path p = stem.string() + ".summary.csv";
      auto out = open_output(p);
      out << kSummaryHeader << '\n';
      for (const auto& row : result.fits) write_summary_row(out, row);
      result.artifacts.push_back(p);
    }
    {
      const double spacing = 2.0 / (per_axis - 1);
      json meta = {
          {"version", kVersion},
          {"kernel", kernel_metadata(result.kernel)},
          {"grid",
           {{"domain", "unit ball"},
            {"per_axis", per_axis},
            {"spacing", spacing},
            {"endpoints_included", true},
            {"candidates", candidates.size()}}},
          {"stop", {{"tol_sq", stop.tol_sq}, {"max_n", stop.max_n}}},
          {"tie_break", kTieBreak},
          {"record_fill", config.record_fill},
          {"iterations", trace.rows.size()},
          {"termination", to_string(trace.termination)},
          {"notes", notes},
      };
      json fits = json::array();
      for (const auto& row : result.fits) fits.push_back(fit_metadata(row));
      meta["fits"] = fits;
      const fs::path p = stem.string() + ".meta.json";
      auto out = open_output(p);
      out << meta.dump(2) << '\n';
      result.artifacts.push_back(p);
    }
    if (config.emit_plots) write_plots(config, result.kernel, trace, result.fits, stem, result.artifacts);

    if (trace.breakdown()) {
      result.exit_code = kExitBreakdown;
      result.message = trace.note;
    }
  } catch (const ConfigError& e) {
    result.exit_code = kExitConfigError;
    result.message = e.what();
  } catch (const InputError& e) {
    result.exit_code = kExitConfigError;
    result.message = e.what();
  }
  return result;
}

std::vector<SuiteComparison> compare_with_reference(const ExperimentResult& result) {
  std::vector<SuiteComparison> out;
  const auto& spec = result.kernel;
  for (const auto& row : result.fits) {
    SuiteComparison cmp{result.name, row, "", ""};
    bool within = false;
    if (row.model == "exponential") {
      if (const auto ref = gaussian_reference(spec.dim)) {
        cmp.reference = fmt::format("c2={} c3={}", ref->hat_c2, ref->hat_c3);
        within = std::abs(row.fit.rate - ref->hat_c3) <= 0.35 * ref->hat_c3;
      }
    } else if (row.model == "algebraic") {
      const int beta = nominal_beta(spec);
      const double target = -static_cast<double>(beta) / spec.dim;
      const auto ref = wendland_reference_c1(beta, spec.dim, CurveKind::Improved);
      cmp.reference = fmt::format("p={:.4g}{}", target, ref ? fmt::format(" c={}", *ref) : "");
      within = row.fit.rate <= target + 0.25 && std::abs(row.fit.rate - target) <= 0.3;
    } else if (row.model == "fill") {
      const double target = -1.0 / spec.dim;
      cmp.reference = fmt::format("p={:.4g}", target);
      within = std::abs(row.fit.rate - target) <= 0.15;
    }
    cmp.status = within ? "within" : "outside";
    out.push_back(std::move(cmp));
  }
  return out;
}

std::vector<ExperimentConfig> load_suite(const fs::path& suite_file, const fs::path& output_dir) {
  std::ifstream in(suite_file);
  if (!in) throw ConfigError("cannot read suite file " + suite_file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("malformed suite file: {}", e.what()));
  }
  std::vector<ExperimentConfig> configs;
  if (!j.contains("experiments")) return configs;
  std::size_t index = 0;
  for (const auto& entry : j.at("experiments")) {
    try {
      configs.push_back(config_from_json(entry, output_dir, index++));
    } catch (const json::exception& e) {
      throw ConfigError(fmt::format("malformed suite entry {}: {}", index - 1, e.what()));
    }
  }
  return configs;
}

SuiteResult run_suite(const fs::path& suite_file, const fs::path& output_dir) {
  SuiteResult suite;
  std::vector<ExperimentConfig> configs;
  try {
    configs = load_suite(suite_file, output_dir);
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec || !fs::is_directory(output_dir)) throw ConfigError("cannot create output directory " + output_dir.string());
  } catch (const ConfigError& e) {
    suite.exit_code = kExitConfigError;
    ExperimentResult failed;
    failed.exit_code = kExitConfigError;
    failed.message = e.what();
    suite.experiments.push_back(std::move(failed));
    suite.failures = 1;
    return suite;
  }

  for (const auto& config : configs) {
    auto result = run_experiment(config);
    if (result.exit_code != kExitSuccess) {
      ++suite.failures;
      SuiteComparison failed{result.name, {config.kernel, config.dim, "", "", {}}, "", "failed: " + result.message};
      suite.comparisons.push_back(std::move(failed));
    } else {
      for (auto& cmp : compare_with_reference(result)) suite.comparisons.push_back(std::move(cmp));
    }
    suite.experiments.push_back(std::move(result));
  }

  auto out = open_output(output_dir / "suite_summary.csv");
  out << "name," << kSummaryHeader << ",reference,status\n";
  for (const auto& cmp : suite.comparisons) {
    std::ostringstream row;
    if (cmp.row.model.empty()) {
      row << fmt::format("{},{},,,,,,,\n", cmp.row.kernel, cmp.row.dim);
    } else {
      write_summary_row(row, cmp.row);
    }
    auto line = row.str();
    line.pop_back();
    out << cmp.name << ',' << line << ',' << cmp.reference << ',' << cmp.status << '\n';
  }
  if (suite.failures > 0) suite.exit_code = kExitPartialSuiteFailure;
  return suite;
}

}  // namespace pgreedy
