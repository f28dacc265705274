#include "pgreedy/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "pgreedy/errors.hpp"

namespace pgreedy {
namespace {

constexpr double kNegativeRadicandLimit = -1e-10;

Eigen::LLT<Eigen::MatrixXd> factorize(const KernelSpec& spec, const PointSet& centers) {
  Eigen::LLT<Eigen::MatrixXd> llt(kernel_matrix(spec, centers));
  if (llt.info() != Eigen::Success) throw ConditioningError("kernel matrix Cholesky factorization failed");
  return llt;
}

double clamp_radicand(double radicand) {
  if (radicand < kNegativeRadicandLimit) throw ConditioningError("negative power function radicand");
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

Eigen::VectorXd newton_coefficients(const Eigen::VectorXd& f_at_centers, const Eigen::MatrixXd& newton_at_selected) {
  const auto n = newton_at_selected.rows();
  if (f_at_centers.size() != n) throw InputError("sample count does not match the number of centers");
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double pivot = newton_at_selected(i, i);
    if (pivot == 0.0) throw NumericalBreakdown("zero diagonal in the Newton triangle");
    c[i] = (f_at_centers[i] - newton_at_selected.row(i).head(i).dot(c.head(i))) / pivot;
  }
  return c;
}

Eigen::VectorXd newton_coefficients(const Eigen::VectorXd& f_at_centers, const GreedyState& state) {
  return newton_coefficients(f_at_centers, state.newton_at_selected());
}

Eigen::VectorXd newton_values_at(const KernelSpec& spec, const PointSet& centers,
                                 const Eigen::MatrixXd& newton_at_selected, Point x) {
  const auto n = newton_at_selected.rows();
  if (static_cast<std::size_t>(n) != centers.size()) throw InputError("triangle size does not match centers");
  Eigen::VectorXd v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double kx = eval(spec, x, centers[static_cast<std::size_t>(k)]);
    v[k] = (kx - newton_at_selected.row(k).head(k).dot(v.head(k))) / newton_at_selected(k, k);
  }
  return v;
}

Interpolant::Interpolant(KernelSpec spec, PointSet centers, Eigen::MatrixXd newton_at_selected,
                         Eigen::VectorXd newton_coeffs)
    : spec_(spec), centers_(std::move(centers)), triangle_(std::move(newton_at_selected)), coeffs_(std::move(newton_coeffs)) {
  if (static_cast<std::size_t>(triangle_.rows()) != centers_.size() || triangle_.cols() != triangle_.rows() ||
      coeffs_.size() != triangle_.rows())
    throw InputError("inconsistent interpolant sizes");
}

Interpolant Interpolant::from_run(const KernelSpec& spec, const PointSet& candidates, const GreedyState& state,
                                  const Eigen::VectorXd& f_at_centers) {
  auto triangle = state.newton_at_selected();
  auto coeffs = newton_coefficients(f_at_centers, triangle);
  return Interpolant(spec, candidates.subset(state.selected()), std::move(triangle), std::move(coeffs));
}

double Interpolant::operator()(Point x) const { return evaluate(newton_values_at(spec_, centers_, triangle_, x)); }

double Interpolant::evaluate(const Eigen::VectorXd& newton_values_at_x) const {
  if (newton_values_at_x.size() != coeffs_.size()) throw InputError("Newton value count mismatch");
  return coeffs_.dot(newton_values_at_x);
}

Eigen::VectorXd Interpolant::translate_coefficients() const {
  // v = K(., X) L^{-T}, so sum c_k v_k = K(., X) (L^{-T} c)
  return triangle_.triangularView<Eigen::Lower>().transpose().solve(coeffs_);
}

void Interpolant::write_csv(std::ostream& out) const {
  const Eigen::VectorXd alpha = translate_coefficients();
  for (int k = 1; k <= centers_.dim(); ++k) out << 'x' << k << ',';
  out << "alpha\n";
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    for (double c : centers_[i]) out << fmt::format("{:.17g},", c);
    out << fmt::format("{:.17g}\n", alpha[static_cast<Eigen::Index>(i)]);
  }
}

double evaluate_interpolant(const Interpolant& interp, Point x) { return interp(x); }

Eigen::VectorXd direct_solve(const KernelSpec& spec, const PointSet& centers, const Eigen::VectorXd& f_at_centers) {
  if (static_cast<std::size_t>(f_at_centers.size()) != centers.size())
    throw InputError("sample count does not match the number of centers");
  if (centers.empty()) return {};
  return factorize(spec, centers).solve(f_at_centers);
}

double power_function_direct(const KernelSpec& spec, const PointSet& centers, Point x) {
  const double kxx = eval(spec, x, x);
  if (centers.empty()) return std::sqrt(kxx);
  // P vanishes on the centers; the dense formula would only return cancellation noise there.
  for (std::size_t i = 0; i < centers.size(); ++i)
    if (squared_distance(centers[i], x) == 0.0) return 0.0;
  const auto llt = factorize(spec, centers);
  const Eigen::VectorXd w = llt.matrixL().solve(kernel_column(spec, x, centers));
  return clamp_radicand(kxx - w.squaredNorm());
}

double residual_native_norm(const KernelSpec& spec, const PointSet& centers, Point x) {
  const double kxx = eval(spec, x, x);
  if (centers.empty()) return std::sqrt(kxx);
  const std::size_t n = centers.size();

  Eigen::VectorXd kx(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) kx[static_cast<Eigen::Index>(i)] = eval(spec, centers[i], x);
  const Eigen::VectorXd alpha = direct_solve(spec, centers, kx);

  // (K(.,x), Pi) = sum alpha_i K(x_i, x);  ||Pi||^2 = sum_ij alpha_i alpha_j K(x_i, x_j)
  double cross = 0.0;
  double proj_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = alpha[static_cast<Eigen::Index>(i)];
    cross += ai * eval(spec, centers[i], x);
    for (std::size_t j = 0; j < n; ++j) proj_sq += ai * alpha[static_cast<Eigen::Index>(j)] * eval(spec, centers[i], centers[j]);
  }
  return clamp_radicand(kxx - 2.0 * cross + proj_sq);
}

}  // namespace pgreedy
