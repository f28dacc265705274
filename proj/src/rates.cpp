#include "pgreedy/rates.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "pgreedy/errors.hpp"

namespace pgreedy {
namespace {

constexpr std::size_t kMinFitPoints = 3;

void check_window(const GreedyTrace& trace, const FitWindow& window) {
  if (window.n_min < 1 || window.n_max < window.n_min) throw InputError("empty fit window");
  if (window.n_max > trace.rows.size()) throw InputError("fit window exceeds trace length");
  if (window.count() < kMinFitPoints) throw InsufficientData("fewer than 3 points in the fit window");
}

template <typename Value>
std::vector<double> window_values(const GreedyTrace& trace, const FitWindow& window, Value value) {
  std::vector<double> out;
  out.reserve(window.count());
  for (std::size_t n = window.n_min; n <= window.n_max; ++n) out.push_back(value(trace.rows[n - 1]));
  return out;
}

std::vector<double> log_of_positive(const std::vector<double>& v, const char* what) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw InputError(fmt::format("{} must be positive in the fit window", what));
    out[i] = std::log(v[i]);
  }
  return out;
}

RateFit fit_log_log(const GreedyTrace& trace, const FitWindow& window, const std::vector<double>& values,
                    const char* what) {
  std::vector<double> log_n;
  for (std::size_t n = window.n_min; n <= window.n_max; ++n) log_n.push_back(std::log(static_cast<double>(n)));
  const auto line = least_squares(log_n, log_of_positive(values, what));
  return RateFit{RateModel::Algebraic, std::exp(line.intercept), line.slope, trace.kernel.dim, window, line.r_squared};
}

}  // namespace

double RateFit::operator()(double n) const {
  if (model == RateModel::Algebraic) return c * std::pow(n, rate);
  return c * std::exp(-rate * std::pow(n, 1.0 / dim));
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("least squares: size mismatch");
  if (x.size() < 2) throw InsufficientData("least squares needs at least two points");
  const double m = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("least squares: abscissae are all equal");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  // relative threshold so exact data with rounding noise still reports 1
  if (syy <= 1e-28 * std::max(1.0, my * my) * m) {
    fit.r_squared = 1.0;
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

FitWindow default_window(const GreedyTrace& trace) {
  const std::size_t len = trace.rows.size();
  FitWindow w;
  w.n_min = len / 4 + 1;
  w.n_max = len;
  const double floor_sq = 100.0 * trace.stop.tol_sq;
  while (w.n_max >= w.n_min && w.n_max > 0) {
    const double p = trace.rows[w.n_max - 1].max_power;
    if (p * p >= floor_sq) break;
    --w.n_max;
  }
  return w;
}

RateFit fit_algebraic(const GreedyTrace& trace, const FitWindow& window) {
  check_window(trace, window);
  const auto values = window_values(trace, window, [](const TraceRow& r) { return r.max_power; });
  return fit_log_log(trace, window, values, "max_power");
}

RateFit fit_exponential(const GreedyTrace& trace, int dim, const FitWindow& window) {
  if (dim < 1) throw InputError("dimension must be positive");
  check_window(trace, window);
  const auto values = window_values(trace, window, [](const TraceRow& r) { return r.max_power; });
  std::vector<double> root_n;
  for (std::size_t n = window.n_min; n <= window.n_max; ++n)
    root_n.push_back(std::pow(static_cast<double>(n), 1.0 / dim));
  const auto line = least_squares(root_n, log_of_positive(values, "max_power"));
  return RateFit{RateModel::Exponential, std::exp(line.intercept), -line.slope, dim, window, line.r_squared};
}

RateFit fit_fill_decay(const GreedyTrace& trace, const FitWindow& window) {
  check_window(trace, window);
  for (std::size_t n = window.n_min; n <= window.n_max; ++n)
    if (!trace.rows[n - 1].fill_distance) throw InputError("fill distance was not recorded");
  const auto values = window_values(trace, window, [](const TraceRow& r) { return *r.fill_distance; });
  return fit_log_log(trace, window, values, "fill distance");
}

BoundConstants bound_constants(double c1, double c2, double c3, double beta, int dim) {
  if (dim < 1) throw InputError("dimension must be positive");
  const double d = dim;
  return {c1 * std::pow(2.0, 5.0 * beta / d - 1.5), std::sqrt(2.0 * c2), std::pow(2.0, -1.0 - 2.0 / d) * c3};
}

double algebraic_exponent(double beta, int dim, CurveKind kind) {
  const double e = -beta / dim;
  return kind == CurveKind::Theoretical ? e + 0.5 : e;
}

std::vector<double> theoretical_curve(const SmoothnessClass& smoothness, int dim, const CurveConstants& constants,
                                      std::span<const double> n_values, CurveKind kind) {
  std::vector<double> out;
  out.reserve(n_values.size());
  if (smoothness.infinite) {
    for (double n : n_values) out.push_back(constants.c * std::exp(-constants.c3 * std::pow(n, 1.0 / dim)));
  } else {
    const double e = algebraic_exponent(smoothness.beta, dim, kind);
    for (double n : n_values) out.push_back(constants.c * std::pow(n, e));
  }
  return out;
}

double fit_prefactor(std::span<const double> n_values, std::span<const double> values, double exponent) {
  if (n_values.size() != values.size() || n_values.empty()) throw InsufficientData("prefactor fit needs data");
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw InputError("prefactor fit needs positive values");
    s += std::log(values[i]) - exponent * std::log(n_values[i]);
  }
  return std::exp(s / static_cast<double>(values.size()));
}

std::optional<GaussianReference> gaussian_reference(int dim) {
  switch (dim) {
    case 1: return GaussianReference{3.47, 1.22};
    case 2: return GaussianReference{5.10, 1.80};
    case 3: return GaussianReference{6.37, 2.31};
    default: return std::nullopt;
  }
}

std::optional<double> wendland_reference_c1(int beta, int dim, CurveKind kind) {
  if (dim < 1 || dim > 3 || beta < 2 || beta > 3) return std::nullopt;
  static constexpr double theoretical[2][3] = {{0.003, 0.01, 0.02}, {0.03, 0.02, 0.02}};
  static constexpr double improved[2][3] = {{0.08, 0.34, 0.49}, {0.32, 0.52, 0.67}};
  const auto& table = kind == CurveKind::Theoretical ? theoretical : improved;
  return table[beta - 2][dim - 1];
}

std::string to_string(RateModel model) { return model == RateModel::Algebraic ? "algebraic" : "exponential"; }

void write_summary_row(std::ostream& out, const SummaryRow& row) {
  out << fmt::format("{},{},{},{},{:.17g},{:.17g},{},{},{:.17g}\n", row.kernel, row.dim, row.beta, row.model, row.fit.c,
                     row.fit.rate, row.fit.window.n_min, row.fit.window.n_max, row.fit.r_squared);
}

}  // namespace pgreedy
