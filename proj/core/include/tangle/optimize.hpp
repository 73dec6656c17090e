#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tangle {

inline constexpr double kOptTol = 1e-8;
inline constexpr int kMaxIter = 10000;

/// Smooth objective on the unit sphere of R^n, optionally restricted to the
/// non-negative orthant.
struct SphereProblem {
  std::size_t dim = 0;
  std::function<double(std::span<const double>)> value;
  /// Writes the Euclidean gradient of `value` into the second argument.
  std::function<void(std::span<const double>, std::span<double>)> gradient;
  bool nonnegative = true;
};

struct AscentOptions {
  int max_iter = kMaxIter;
  double tol = kOptTol;
  double initial_step = 0.5;
};

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Norm of the gradient projected onto the feasible tangent cone.
  double kkt_residual = 0.0;
};

/// Nearest feasible point: clamp negatives (when restricted) and rescale.
std::vector<double> project_to_sphere(std::vector<double> x, bool nonnegative);

/// Tangential part of g at x; at x_i = 0 on the orthant boundary,
/// components pointing out of the orthant are dropped.
std::vector<double> projected_gradient(std::span<const double> x, std::span<const double> g,
                                       bool nonnegative);

/// Projected gradient ascent with backtracking (halving from the initial
/// step). Stops when the projected gradient norm is <= tol.
AscentResult maximize_on_sphere(const SphereProblem& problem, std::vector<double> start,
                                const AscentOptions& options = {});

/// Largest discrepancy between `gradient` and central differences of
/// `value` (step h), each component divided by max(|g_i|, ||g||, 1e-3).
double gradient_check(const SphereProblem& problem, std::span<const double> x, double h = 1e-6);

/// The same comparison along the n tangent directions e_i - x_i x, with the
/// probes renormalised onto the sphere, so `value` is only sampled on it.
double tangent_gradient_check(const SphereProblem& problem, std::span<const double> x,
                              double h = 1e-6);

}  // namespace tangle
