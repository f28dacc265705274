#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

#include "pgreedy/point_set.hpp"

namespace pgreedy {

/// Uniform per_axis^dim grid on [-1, 1]^dim (coordinates -1 + 2i/(per_axis-1))
/// intersected with the closed unit ball, in lexicographic order.
PointSet discretize_ball(int dim, int per_axis);

/// max over candidates of min over selected of the Euclidean distance.
double fill_distance(const PointSet& selected, const PointSet& candidates);

/// Running fill distance of a growing prefix of selected points; each call
/// to add() costs one pass over the candidates.
class FillDistanceTracker {
 public:
  explicit FillDistanceTracker(const PointSet& candidates);

  double add(Point selected_point);
  double current() const noexcept { return current_; }

 private:
  const PointSet* candidates_;
  std::vector<double> nearest_;
  double current_ = std::numeric_limits<double>::infinity();
};

/// One row per point, columns x1..xd.
void write_points_csv(std::ostream& out, const PointSet& pts);

}  // namespace pgreedy
