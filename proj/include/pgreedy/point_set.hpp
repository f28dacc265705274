#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pgreedy {

using Point = std::span<const double>;

/// Ordered list of points in R^dim, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);
  PointSet(int dim, std::vector<double> coords);
  PointSet(int dim, std::initializer_list<std::initializer_list<double>> rows);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const noexcept { return coords_.empty(); }

  Point operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

  void push_back(Point p);
  PointSet subset(std::span<const std::size_t> indices) const;

  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 1;
  std::vector<double> coords_;
};

double squared_distance(Point x, Point y) noexcept;
double distance(Point x, Point y) noexcept;

}  // namespace pgreedy
