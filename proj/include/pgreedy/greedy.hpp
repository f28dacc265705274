#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pgreedy/kernel.hpp"
#include "pgreedy/point_set.hpp"

namespace pgreedy {

/// Pivots with squared power at or below this floor are refused by
/// newton_column, independently of the stopping tolerance.
inline constexpr double kPivotFloorSq = 1e-30;

/// Candidates whose power^2 is within this relative distance of the maximum
/// count as tied; the lowest index among them is selected.
inline constexpr double kTieRelTol = 1e-12;

struct StopCriteria {
  double tol_sq = 1e-15;  ///< stop once max power^2 <= tol_sq
  std::size_t max_n = 1000;

  void validate() const;
};

/// Incremental state of the P-greedy selection over a fixed candidate set.
///
/// Column k of newton_values() holds the k-th Newton basis function v_k at
/// every candidate; power_sq() holds P_{V(X_n)}(x)^2 at every candidate.
/// The change-of-basis triangle has entry (i, k) = v_k(x_i) for selected x_i.
class GreedyState {
 public:
  GreedyState() = default;
  GreedyState(std::size_t num_candidates, double diagonal, std::size_t capacity);

  std::size_t num_candidates() const noexcept { return static_cast<std::size_t>(power_sq_.size()); }
  std::size_t size() const noexcept { return selected_.size(); }

  const std::vector<std::size_t>& selected() const noexcept { return selected_; }
  bool is_selected(std::size_t j) const noexcept { return is_selected_[j] != 0; }

  const Eigen::VectorXd& power_sq() const noexcept { return power_sq_; }

  /// First size() columns of the candidate table; empty after release_columns().
  Eigen::Ref<const Eigen::MatrixXd> newton_values() const;
  bool has_columns() const noexcept { return columns_kept_; }

  /// Lower-triangular size() x size() table of v_k(x_i).
  Eigen::MatrixXd newton_at_selected() const;

  /// Frees the candidate table. The triangle stays available.
  void release_columns();

 private:
  friend void update_power(GreedyState&, std::size_t, const Eigen::VectorXd&);

  std::vector<std::size_t> selected_;
  std::vector<char> is_selected_;
  Eigen::VectorXd power_sq_;
  Eigen::MatrixXd newton_values_;
  Eigen::MatrixXd triangle_;
  bool columns_kept_ = true;
};

GreedyState init_state(const KernelSpec& spec, const PointSet& candidates, std::size_t capacity = 0);

/// Maximum of power_sq over unselected candidates (0 when none remain).
double max_power_sq(const GreedyState& state);

/// argmax of power_sq over unselected candidates, lowest index on ties
/// (ties up to kTieRelTol).
/// nullopt when every unselected candidate has zero power (or none remain).
std::optional<std::size_t> select_next(const GreedyState& state);

/// Next Newton basis function at every candidate, pivoting at candidate j:
///   v_n(x) = (K(x, x_j) - sum_{k<n} v_k(x_j) v_k(x)) / sqrt(power_sq[j]).
Eigen::VectorXd newton_column(const KernelSpec& spec, const PointSet& candidates, const GreedyState& state,
                              std::size_t j);

/// power_sq <- max(power_sq - column^2, 0), records j as selected and
/// appends the column to the tables.
void update_power(GreedyState& state, std::size_t j, const Eigen::VectorXd& column);

enum class Termination { Tolerance, MaxSize, Exhausted, Breakdown };

std::string to_string(Termination t);

struct TraceRow {
  std::size_t n = 0;
  std::size_t selected_index = 0;
  std::vector<double> selected_point;
  double max_power = 0.0;  ///< max_x P_{V(X_{n-1})}(x) when x_n was picked
  std::optional<double> fill_distance;
};

struct GreedyTrace {
  KernelSpec kernel;
  StopCriteria stop;
  std::vector<TraceRow> rows;
  Termination termination = Termination::Tolerance;
  std::string note;

  bool breakdown() const noexcept { return termination == Termination::Breakdown; }
};

struct GreedyRun {
  GreedyState state;
  GreedyTrace trace;
};

struct RunOptions {
  bool record_fill = false;
  bool keep_columns = true;
};

GreedyRun run_pgreedy(const KernelSpec& spec, const PointSet& candidates, const StopCriteria& stop,
                      const RunOptions& options = {});

}  // namespace pgreedy
