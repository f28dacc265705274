#include "pgreedy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "pgreedy/errors.hpp"

namespace pgreedy {

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim < 1) throw InputError("point dimension must be positive");
}

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim < 1) throw InputError("point dimension must be positive");
  if (coords_.size() % static_cast<std::size_t>(dim) != 0)
    throw InputError("coordinate count is not a multiple of the dimension");
}

PointSet::PointSet(int dim, std::initializer_list<std::initializer_list<double>> rows) : PointSet(dim) {
  for (const auto& row : rows) push_back(Point(row.begin(), row.size()));
}

void PointSet::push_back(Point p) {
  if (p.size() != static_cast<std::size_t>(dim_)) throw InputError("point dimension mismatch");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(dim_);
  out.coords_.reserve(indices.size() * static_cast<std::size_t>(dim_));
  for (std::size_t i : indices) {
    if (i >= size()) throw InputError("point index out of range");
    out.push_back((*this)[i]);
  }
  return out;
}

double squared_distance(Point x, Point y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double distance(Point x, Point y) noexcept { return std::sqrt(squared_distance(x, y)); }

PointSet discretize_ball(int dim, int per_axis) {
  if (dim < 1) throw InputError("dimension must be positive");
  if (per_axis < 2) throw InputError("per_axis must be at least 2");

  std::vector<double> axis(static_cast<std::size_t>(per_axis));
  for (int i = 0; i < per_axis; ++i) axis[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (per_axis - 1);

  PointSet out(dim);
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> p(static_cast<std::size_t>(dim));
  while (true) {
    double norm_sq = 0.0;
    for (int k = 0; k < dim; ++k) {
      p[static_cast<std::size_t>(k)] = axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      norm_sq += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
    }
    if (norm_sq <= 1.0) out.push_back(p);

    // odometer increment, last coordinate fastest
    int k = dim - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == per_axis) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

double fill_distance(const PointSet& selected, const PointSet& candidates) {
  if (selected.empty()) throw InputError("fill distance is undefined for an empty selection");
  if (!candidates.empty() && candidates.dim() != selected.dim()) throw InputError("point dimension mismatch");
  double h = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < selected.size(); ++j) nearest = std::min(nearest, distance(candidates[i], selected[j]));
    h = std::max(h, nearest);
  }
  return h;
}

FillDistanceTracker::FillDistanceTracker(const PointSet& candidates)
    : candidates_(&candidates), nearest_(candidates.size(), std::numeric_limits<double>::infinity()) {}

double FillDistanceTracker::add(Point selected_point) {
  if (selected_point.size() != static_cast<std::size_t>(candidates_->dim()))
    throw InputError("point dimension mismatch");
  double h = 0.0;
  for (std::size_t i = 0; i < nearest_.size(); ++i) {
    nearest_[i] = std::min(nearest_[i], distance((*candidates_)[i], selected_point));
    h = std::max(h, nearest_[i]);
  }
  current_ = h;
  return h;
}

void write_points_csv(std::ostream& out, const PointSet& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto p = pts[i];
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << fmt::format("{:.17g}", p[k]);
    out << '\n';
  }
}

}  // namespace pgreedy
