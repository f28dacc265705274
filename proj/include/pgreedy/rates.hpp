#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgreedy/greedy.hpp"
#include "pgreedy/kernel.hpp"

namespace pgreedy {

/// Inclusive range of iteration indices n (1-based) used by a fit.
struct FitWindow {
  std::size_t n_min = 1;
  std::size_t n_max = 1;

  std::size_t count() const noexcept { return n_max >= n_min ? n_max - n_min + 1 : 0; }
};

enum class RateModel {
  Algebraic,    ///< c * n^rate
  Exponential,  ///< c * exp(-rate * n^(1/dim))
};

struct RateFit {
  RateModel model = RateModel::Algebraic;
  double c = 0.0;
  double rate = 0.0;  ///< exponent p, or decay constant c3
  int dim = 1;
  FitWindow window;
  double r_squared = 0.0;

  double operator()(double n) const;
};

/// Ordinary least squares y = a + b x. r_squared is 1 when y has no spread
/// and the residual vanishes.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Drops the first 25% of iterations and the tail where max_power^2 falls
/// below 100 * tol_sq.
FitWindow default_window(const GreedyTrace& trace);

RateFit fit_algebraic(const GreedyTrace& trace, const FitWindow& window);
RateFit fit_exponential(const GreedyTrace& trace, int dim, const FitWindow& window);
RateFit fit_fill_decay(const GreedyTrace& trace, const FitWindow& window);

struct BoundConstants {
  double hat_c1 = 0.0;
  double hat_c2 = 0.0;
  double hat_c3 = 0.0;
};

/// Greedy-rate constants from the uniform-point constants c1, c2, c3:
///   hat_c1 = c1 2^(5 beta / d - 3/2),  hat_c2 = sqrt(2 c2),  hat_c3 = 2^(-1 - 2/d) c3.
BoundConstants bound_constants(double c1, double c2, double c3, double beta, int dim);

enum class CurveKind {
  Theoretical,  ///< c n^(-beta/d + 1/2), or c2 exp(-c3 n^(1/d)) for infinite smoothness
  Improved,     ///< c n^(-beta/d)
};

struct CurveConstants {
  double c = 1.0;   ///< algebraic prefactor or exponential c2
  double c3 = 1.0;  ///< exponential decay constant
};

std::vector<double> theoretical_curve(const SmoothnessClass& smoothness, int dim, const CurveConstants& constants,
                                      std::span<const double> n_values, CurveKind kind = CurveKind::Theoretical);

/// Exponent of the algebraic curve of the given kind.
double algebraic_exponent(double beta, int dim, CurveKind kind);

/// Least-squares prefactor of c * n^exponent over the window (slope fixed).
double fit_prefactor(std::span<const double> n_values, std::span<const double> values, double exponent);

/// Reported reference estimates for the Gaussian exponential rate (dim 1..3)
/// and the Wendland algebraic prefactors (beta 2..3, dim 1..3).
struct GaussianReference {
  double hat_c2;
  double hat_c3;
};
std::optional<GaussianReference> gaussian_reference(int dim);
std::optional<double> wendland_reference_c1(int beta, int dim, CurveKind kind);

std::string to_string(RateModel model);

/// Row of the run-summary CSV:
/// kernel,dim,beta,model,c,p_or_c3,window_lo,window_hi,r_squared
struct SummaryRow {
  std::string kernel;
  int dim = 1;
  std::string beta;  ///< "inf" for infinitely smooth kernels
  std::string model;
  RateFit fit;
};

inline constexpr const char* kSummaryHeader = "kernel,dim,beta,model,c,p_or_c3,window_lo,window_hi,r_squared";
void write_summary_row(std::ostream& out, const SummaryRow& row);

}  // namespace pgreedy
