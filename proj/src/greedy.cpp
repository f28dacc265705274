#include "pgreedy/greedy.hpp"

#include <algorithm>
#include <cmath>

#include "pgreedy/errors.hpp"
#include "pgreedy/geometry.hpp"

namespace pgreedy {

void StopCriteria::validate() const {
  if (!(tol_sq > 0.0)) throw InputError("stopping tolerance must be positive");
  if (max_n < 1) throw InputError("max_n must be at least 1");
}

GreedyState::GreedyState(std::size_t num_candidates, double diagonal, std::size_t capacity)
    : is_selected_(num_candidates, 0),
      power_sq_(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(num_candidates), diagonal)),
      newton_values_(static_cast<Eigen::Index>(num_candidates), static_cast<Eigen::Index>(capacity)),
      triangle_(static_cast<Eigen::Index>(capacity), static_cast<Eigen::Index>(capacity)) {
  selected_.reserve(capacity);
}

Eigen::Ref<const Eigen::MatrixXd> GreedyState::newton_values() const {
  if (!columns_kept_) return newton_values_.leftCols(0);
  return newton_values_.leftCols(static_cast<Eigen::Index>(size()));
}

Eigen::MatrixXd GreedyState::newton_at_selected() const {
  const auto n = static_cast<Eigen::Index>(size());
  return triangle_.topLeftCorner(n, n).triangularView<Eigen::Lower>();
}

void GreedyState::release_columns() {
  newton_values_.resize(0, 0);
  columns_kept_ = false;
}

GreedyState init_state(const KernelSpec& spec, const PointSet& candidates, std::size_t capacity) {
  if (candidates.empty()) throw InputError("candidate set is empty");
  if (candidates.dim() != spec.dim) throw InputError("candidate dimension does not match kernel dimension");
  return GreedyState(candidates.size(), spec.diagonal(), capacity);
}

double max_power_sq(const GreedyState& state) {
  const auto& p = state.power_sq();
  double max_value = 0.0;
  for (std::size_t j = 0; j < state.num_candidates(); ++j)
    if (!state.is_selected(j)) max_value = std::max(max_value, p[static_cast<Eigen::Index>(j)]);
  return max_value;
}

std::optional<std::size_t> select_next(const GreedyState& state) {
  const auto& p = state.power_sq();
  const double max_value = max_power_sq(state);
  if (!(max_value > 0.0)) return std::nullopt;

  // lowest index among values equal to the maximum up to rounding
  const double threshold = max_value * (1.0 - kTieRelTol);
  for (std::size_t j = 0; j < state.num_candidates(); ++j)
    if (!state.is_selected(j) && p[static_cast<Eigen::Index>(j)] >= threshold) return j;
  return std::nullopt;
}

Eigen::VectorXd newton_column(const KernelSpec& spec, const PointSet& candidates, const GreedyState& state,
                              std::size_t j) {
  if (j >= state.num_candidates()) throw InputError("pivot index out of range");
  if (state.is_selected(j)) throw InputError("pivot already selected");
  if (!state.has_columns()) throw InputError("candidate columns were released");
  const double pivot_sq = state.power_sq()[static_cast<Eigen::Index>(j)];
  if (!(pivot_sq > kPivotFloorSq)) throw NumericalBreakdown("Newton pivot collapsed (power^2 below 1e-30)");

  Eigen::VectorXd column = kernel_column(spec, candidates[j], candidates);
  const auto values = state.newton_values();
  if (values.cols() > 0) {
    const Eigen::VectorXd at_pivot = values.row(static_cast<Eigen::Index>(j)).transpose();
    column.noalias() -= values * at_pivot;
  }
  column /= std::sqrt(pivot_sq);
  return column;
}

void update_power(GreedyState& state, std::size_t j, const Eigen::VectorXd& column) {
  if (column.size() != state.power_sq_.size()) throw InputError("column length does not match candidate count");
  if (j >= state.num_candidates() || state.is_selected(j)) throw InputError("invalid pivot index");
  if (!state.columns_kept_) throw InputError("candidate columns were released");

  state.power_sq_ = (state.power_sq_.array() - column.array().square()).max(0.0).matrix();
  state.power_sq_[static_cast<Eigen::Index>(j)] = 0.0;

  const auto n = static_cast<Eigen::Index>(state.size());
  if (n >= state.newton_values_.cols())
    state.newton_values_.conservativeResize(Eigen::NoChange, std::max<Eigen::Index>(4, 2 * n));
  state.newton_values_.col(n) = column;

  if (n >= state.triangle_.rows()) {
    const Eigen::Index cap = std::max<Eigen::Index>(4, 2 * n);
    state.triangle_.conservativeResize(cap, cap);
  }
  // row n: v_1..v_{n+1} at the new center
  state.triangle_.row(n).head(n + 1) = state.newton_values_.row(static_cast<Eigen::Index>(j)).head(n + 1);

  state.selected_.push_back(j);
  state.is_selected_[j] = 1;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Tolerance: return "tolerance";
    case Termination::MaxSize: return "max_n";
    case Termination::Exhausted: return "exhausted";
    case Termination::Breakdown: return "breakdown";
  }
  return "unknown";
}

GreedyRun run_pgreedy(const KernelSpec& spec, const PointSet& candidates, const StopCriteria& stop,
                      const RunOptions& options) {
  stop.validate();
  const std::size_t capacity = std::min(stop.max_n, candidates.size());
  GreedyRun run{init_state(spec, candidates, capacity), GreedyTrace{spec, stop, {}, Termination::Tolerance, {}}};
  auto& state = run.state;
  auto& trace = run.trace;

  std::optional<FillDistanceTracker> fill;
  if (options.record_fill) fill.emplace(candidates);

  while (true) {
    if (state.size() >= stop.max_n) {
      trace.termination = Termination::MaxSize;
      break;
    }
    const auto next = select_next(state);
    if (!next) {
      trace.termination = Termination::Exhausted;
      trace.note = "power function vanished on every remaining candidate";
      break;
    }
    const std::size_t j = *next;
    const double max_sq = max_power_sq(state);
    if (max_sq <= stop.tol_sq) {
      trace.termination = Termination::Tolerance;
      break;
    }

    Eigen::VectorXd column;
    try {
      column = newton_column(spec, candidates, state, j);
    } catch (const NumericalBreakdown& e) {
      trace.termination = Termination::Breakdown;
      trace.note = e.what();
      break;
    }
    update_power(state, j, column);

    TraceRow row;
    row.n = state.size();
    row.selected_index = j;
    row.selected_point.assign(candidates[j].begin(), candidates[j].end());
    row.max_power = std::sqrt(max_sq);
    if (fill) row.fill_distance = fill->add(candidates[j]);
    trace.rows.push_back(std::move(row));
  }

  if (!options.keep_columns) state.release_columns();
  return run;
}

}  // namespace pgreedy
