#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "pgreedy/greedy.hpp"
#include "pgreedy/kernel.hpp"
#include "pgreedy/point_set.hpp"

namespace pgreedy {

/// Solves the lower-triangular system (newton_at_selected) c = f_at_centers,
/// giving the interpolant sum_k c_k v_k.
Eigen::VectorXd newton_coefficients(const Eigen::VectorXd& f_at_centers, const Eigen::MatrixXd& newton_at_selected);
Eigen::VectorXd newton_coefficients(const Eigen::VectorXd& f_at_centers, const GreedyState& state);

/// Newton basis v_1..v_n at an arbitrary point, recomputed from the
/// change-of-basis triangle.
Eigen::VectorXd newton_values_at(const KernelSpec& spec, const PointSet& centers,
                                 const Eigen::MatrixXd& newton_at_selected, Point x);

/// Kernel interpolant on greedily selected centers, held in the Newton basis.
class Interpolant {
 public:
  Interpolant(KernelSpec spec, PointSet centers, Eigen::MatrixXd newton_at_selected, Eigen::VectorXd newton_coeffs);

  /// Builds the interpolant of samples f at the run's selected centers.
  static Interpolant from_run(const KernelSpec& spec, const PointSet& candidates, const GreedyState& state,
                              const Eigen::VectorXd& f_at_centers);

  const KernelSpec& spec() const noexcept { return spec_; }
  const PointSet& centers() const noexcept { return centers_; }
  const Eigen::VectorXd& newton_coeffs() const noexcept { return coeffs_; }
  const Eigen::MatrixXd& newton_at_selected() const noexcept { return triangle_; }

  double operator()(Point x) const;
  /// Uses precomputed v_k(x) instead of recomputing them.
  double evaluate(const Eigen::VectorXd& newton_values_at_x) const;

  /// alpha with interpolant = sum_i alpha_i K(., x_i): back substitution
  /// through the transposed triangle.
  Eigen::VectorXd translate_coefficients() const;

  /// CSV with columns x1..xd,alpha.
  void write_csv(std::ostream& out) const;

 private:
  KernelSpec spec_;
  PointSet centers_;
  Eigen::MatrixXd triangle_;
  Eigen::VectorXd coeffs_;
};

double evaluate_interpolant(const Interpolant& interp, Point x);

/// Dense solve of A alpha = f via Cholesky; no regularization.
Eigen::VectorXd direct_solve(const KernelSpec& spec, const PointSet& centers, const Eigen::VectorXd& f_at_centers);

/// sqrt(K(x,x) - k_x^T A^{-1} k_x) from a dense factorization of A. Exactly 0 at a center.
double power_function_direct(const KernelSpec& spec, const PointSet& centers, Point x);

/// Native-space norm of K(., x) - Pi K(., x), assembled as
/// K(x,x) - 2 alpha^T k_x + alpha^T A alpha with alpha = A^{-1} k_x.
double residual_native_norm(const KernelSpec& spec, const PointSet& centers, Point x);

}  // namespace pgreedy
