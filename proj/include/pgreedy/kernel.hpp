#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "pgreedy/point_set.hpp"

namespace pgreedy {

enum class KernelFamily { Gaussian, Wendland };

/// Smoothness of a kernel: native space norm-equivalent to W_2^beta, or
/// infinitely smooth.
struct SmoothnessClass {
  bool infinite = false;
  double beta = 0.0;

  static SmoothnessClass finite(double beta) { return {false, beta}; }
  static SmoothnessClass infinitely_smooth() { return {true, 0.0}; }
};

/// Radial kernel K(x, y) = phi(shape * |x - y|) on R^dim.
///
/// Wendland kernels are the compactly supported phi_{3,k} functions
/// (positive definite up to d = 3), scaled so that phi(0) = 1:
///   k = 0: (1-r)_+^2
///   k = 1: (1-r)_+^4 (4r + 1)
///   k = 2: (1-r)_+^6 (35r^2 + 18r + 3) / 3
struct KernelSpec {
  KernelFamily family = KernelFamily::Gaussian;
  int wendland_k = 0;
  double shape = 1.0;
  int dim = 1;

  static KernelSpec gaussian(double shape, int dim);
  static KernelSpec wendland(int k, double shape, int dim);

  /// Parses `gaussian` | `wendland-k0` | `wendland-k1` | `wendland-k2`.
  static KernelSpec from_id(std::string_view id, double shape, int dim);

  /// Inverse of from_id.
  std::string id() const;

  /// phi(0), the constant diagonal K(x, x).
  double diagonal() const noexcept { return 1.0; }

  /// Sobolev order of the native space on R^dim. For phi_{3,k} restricted
  /// to R^d this is k + (d + 1) / 2.
  SmoothnessClass smoothness() const;

  void validate() const;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

/// Wendland smoothness index used to realize a nominal integer smoothness
/// beta in dimension dim: the smallest k with k + (dim + 1) / 2 >= beta.
/// Throws InputError when no k in {0, 1, 2} qualifies.
int wendland_index_for_beta(int beta, int dim);

/// Nominal integer beta attached to a Wendland kernel (inverse of
/// wendland_index_for_beta).
int nominal_beta(const KernelSpec& spec);

double eval_radial(const KernelSpec& spec, double r) noexcept;

double eval(const KernelSpec& spec, Point x, Point y);

/// Entry i is K(pts[i], x).
Eigen::VectorXd kernel_column(const KernelSpec& spec, Point x, const PointSet& pts);

/// Dense kernel matrix; throws DegenerateInputError on duplicate points.
Eigen::MatrixXd kernel_matrix(const KernelSpec& spec, const PointSet& pts);

}  // namespace pgreedy
