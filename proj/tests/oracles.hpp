#pragma once

// Test-only reference computations. Nothing here goes through the
// incremental Newton recursion.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pgreedy/kernel.hpp"
#include "pgreedy/point_set.hpp"

namespace pgreedy::testing {

/// n pairwise-distinct points uniform in [-1, 1]^dim.
inline PointSet random_points(std::mt19937_64& rng, int dim, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PointSet pts(dim);
  std::vector<double> p(static_cast<std::size_t>(dim));
  while (pts.size() < n) {
    for (auto& c : p) c = u(rng);
    bool duplicate = false;
    for (std::size_t i = 0; i < pts.size() && !duplicate; ++i) duplicate = squared_distance(pts[i], p) < 1e-12;
    if (!duplicate) pts.push_back(p);
  }
  return pts;
}

/// Grid on [-1, 1] with m points, endpoints included.
inline PointSet line_points(std::size_t m) {
  PointSet pts(1);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(m - 1);
    pts.push_back(std::vector<double>{x});
  }
  return pts;
}

/// Modified Gram-Schmidt of the translates K(., x_order[k]) in the native
/// inner product (K(., a), K(., b)) = K(a, b). Column k of the result holds
/// the coefficients of v_k in the translates K(., x_order[0..k]).
inline Eigen::MatrixXd gram_schmidt_coefficients(const KernelSpec& spec, const PointSet& centers) {
  const auto n = static_cast<Eigen::Index>(centers.size());
  const Eigen::MatrixXd gram = kernel_matrix(spec, centers);
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd a = Eigen::VectorXd::Unit(n, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double proj = coeffs.col(i).dot(gram * a);
      a -= proj * coeffs.col(i);
    }
    a /= std::sqrt(a.dot(gram * a));
    coeffs.col(k) = a;
  }
  return coeffs;
}

/// Newton basis values at every candidate from the Gram-Schmidt oracle.
inline Eigen::MatrixXd gram_schmidt_values(const KernelSpec& spec, const PointSet& centers, const PointSet& at) {
  const Eigen::MatrixXd coeffs = gram_schmidt_coefficients(spec, centers);
  Eigen::MatrixXd k(static_cast<Eigen::Index>(at.size()), static_cast<Eigen::Index>(centers.size()));
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = 0; j < centers.size(); ++j)
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval(spec, at[i], centers[j]);
  return k * coeffs;
}

/// Squared power function from the dense formula K(x,x) - k^T A^{-1} k,
/// solved with a full-pivot LU (distinct from the library's Cholesky).
inline double power_sq_lu(const KernelSpec& spec, const PointSet& centers, Point x) {
  if (centers.empty()) return eval(spec, x, x);
  const Eigen::MatrixXd a = kernel_matrix(spec, centers);
  const Eigen::VectorXd k = kernel_column(spec, x, centers);
  return eval(spec, x, x) - k.dot(a.fullPivLu().solve(k));
}

}  // namespace pgreedy::testing
