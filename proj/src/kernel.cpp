#include "pgreedy/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pgreedy/errors.hpp"

namespace pgreedy {

KernelSpec KernelSpec::gaussian(double shape, int dim) {
  KernelSpec spec{KernelFamily::Gaussian, 0, shape, dim};
  spec.validate();
  return spec;
}

KernelSpec KernelSpec::wendland(int k, double shape, int dim) {
  KernelSpec spec{KernelFamily::Wendland, k, shape, dim};
  spec.validate();
  return spec;
}

KernelSpec KernelSpec::from_id(std::string_view id, double shape, int dim) {
  if (id == "gaussian") return gaussian(shape, dim);
  if (id == "wendland-k0") return wendland(0, shape, dim);
  if (id == "wendland-k1") return wendland(1, shape, dim);
  if (id == "wendland-k2") return wendland(2, shape, dim);
  throw InputError("unknown kernel id '" + std::string(id) + "'");
}

std::string KernelSpec::id() const {
  if (family == KernelFamily::Gaussian) return "gaussian";
  return "wendland-k" + std::to_string(wendland_k);
}

SmoothnessClass KernelSpec::smoothness() const {
  if (family == KernelFamily::Gaussian) return SmoothnessClass::infinitely_smooth();
  return SmoothnessClass::finite(wendland_k + 0.5 * (dim + 1));
}

void KernelSpec::validate() const {
  if (!(shape > 0.0) || !std::isfinite(shape)) throw InputError("kernel shape must be positive");
  if (dim < 1) throw InputError("kernel dimension must be positive");
  if (family == KernelFamily::Wendland) {
    if (wendland_k < 0 || wendland_k > 2) throw InputError("Wendland index must be 0, 1 or 2");
    // phi_{3,k} is only positive definite up to R^3.
    if (dim > 3) throw InputError("Wendland phi_{3,k} kernels require dim <= 3");
  }
}

int wendland_index_for_beta(int beta, int dim) {
  if (dim < 1 || dim > 3) throw InputError("Wendland kernels require 1 <= dim <= 3");
  // smallest k with 2k + d + 1 >= 2 beta
  const int k = std::max(0, (2 * beta - dim - 1 + 1) / 2);
  if (k > 2) throw InputError("no Wendland kernel with k <= 2 reaches beta = " + std::to_string(beta));
  return k;
}

int nominal_beta(const KernelSpec& spec) {
  if (spec.family != KernelFamily::Wendland) throw InputError("nominal beta is defined for Wendland kernels only");
  return spec.wendland_k + (spec.dim + 1) / 2;
}

double eval_radial(const KernelSpec& spec, double r) noexcept {
  const double s = spec.shape * r;
  if (spec.family == KernelFamily::Gaussian) return std::exp(-s * s);

  const double t = std::max(1.0 - s, 0.0);
  switch (spec.wendland_k) {
    case 0:
      return t * t;
    case 1: {
      const double t2 = t * t;
      return t2 * t2 * (4.0 * s + 1.0);
    }
    default: {
      const double t2 = t * t;
      return t2 * t2 * t2 * (35.0 * s * s + 18.0 * s + 3.0) / 3.0;
    }
  }
}

double eval(const KernelSpec& spec, Point x, Point y) {
  if (x.size() != static_cast<std::size_t>(spec.dim) || y.size() != x.size())
    throw InputError("point dimension does not match kernel dimension");
  return eval_radial(spec, distance(x, y));
}

Eigen::VectorXd kernel_column(const KernelSpec& spec, Point x, const PointSet& pts) {
  if (x.size() != static_cast<std::size_t>(spec.dim) || (!pts.empty() && pts.dim() != spec.dim))
    throw InputError("point dimension does not match kernel dimension");
  Eigen::VectorXd col(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    col[static_cast<Eigen::Index>(i)] = eval_radial(spec, distance(pts[i], x));
  return col;
}

Eigen::MatrixXd kernel_matrix(const KernelSpec& spec, const PointSet& pts) {
  if (!pts.empty() && pts.dim() != spec.dim) throw InputError("point dimension does not match kernel dimension");
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = spec.diagonal();
    for (Eigen::Index j = 0; j < i; ++j) {
      const double r = distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      if (r == 0.0) throw DegenerateInputError("duplicate points make the kernel matrix singular");
      a(i, j) = a(j, i) = eval_radial(spec, r);
    }
  }
  return a;
}

}  // namespace pgreedy
