#include "tangle/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tangle {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::vector<double> project_to_sphere(std::vector<double> x, bool nonnegative) {
  if (nonnegative)
    for (double& v : x) v = std::max(v, 0.0);
  const double n = norm(x);
  if (!(n > 0.0)) throw std::invalid_argument("project_to_sphere: point projects to zero");
  for (double& v : x) v /= n;
  return x;
}

std::vector<double> projected_gradient(std::span<const double> x, std::span<const double> g,
                                       bool nonnegative) {
  std::vector<double> d(g.begin(), g.end());
  std::vector<bool> pinned(x.size(), false);
  if (nonnegative)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] <= 0.0 && g[i] <= 0.0) pinned[i] = true;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (pinned[i]) d[i] = 0.0;
  const double radial = dot(x, d);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!pinned[i]) d[i] -= radial * x[i];
  return d;
}

AscentResult maximize_on_sphere(const SphereProblem& problem, std::vector<double> start,
                                const AscentOptions& options) {
  if (start.size() != problem.dim) throw std::invalid_argument("maximize_on_sphere: bad start");
  AscentResult r;
  r.x = project_to_sphere(std::move(start), problem.nonnegative);
  r.value = problem.value(r.x);
  std::vector<double> g(problem.dim);

  for (r.iterations = 0; r.iterations < options.max_iter; ++r.iterations) {
    problem.gradient(r.x, g);
    const std::vector<double> d = projected_gradient(r.x, g, problem.nonnegative);
    const double dd = dot(d, d);
    r.kkt_residual = std::sqrt(dd);
    if (r.kkt_residual <= options.tol) {
      r.converged = true;
      return r;
    }

    // Armijo backtracking; the slack absorbs round-off once the predicted
    // gain drops below the resolution of the objective.
    const double slack = 1e-15 * std::max(1.0, std::abs(r.value));
    bool moved = false;
    for (double step = options.initial_step; step > 1e-16; step /= 2.0) {
      std::vector<double> trial(r.x);
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += step * d[i];
      trial = project_to_sphere(std::move(trial), problem.nonnegative);
      const double v = problem.value(trial);
      if (v >= r.value + 1e-4 * step * dd - slack) {
        r.x = std::move(trial);
        r.value = v;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  problem.gradient(r.x, g);
  r.kkt_residual = norm(projected_gradient(r.x, g, problem.nonnegative));
  r.converged = r.kkt_residual <= options.tol;
  return r;
}

double gradient_check(const SphereProblem& problem, std::span<const double> x, double h) {
  std::vector<double> g(problem.dim);
  problem.gradient(x, g);
  const double scale = std::max(norm(g), 1e-3);
  double worst = 0.0;
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < problem.dim; ++i) {
    const double keep = probe[i];
    probe[i] = keep + h;
    const double up = problem.value(probe);
    probe[i] = keep - h;
    const double down = problem.value(probe);
    probe[i] = keep;
    const double fd = (up - down) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[i]) / std::max(std::abs(g[i]), scale));
  }
  return worst;
}

double tangent_gradient_check(const SphereProblem& problem, std::span<const double> x, double h) {
  const std::size_t n = problem.dim;
  std::vector<double> g(n);
  problem.gradient(x, g);
  const std::vector<double> g_tan = projected_gradient(x, g, false);
  const double scale = std::max(norm(g_tan), 1e-3);
  double worst = 0.0;
  std::vector<double> t(n), probe(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) t[k] = (k == i ? 1.0 : 0.0) - x[i] * x[k];
    auto along = [&](double step) {
      for (std::size_t k = 0; k < n; ++k) probe[k] = x[k] + step * t[k];
      const double r = norm(probe);
      for (double& v : probe) v /= r;
      return problem.value(probe);
    };
    const double fd = (along(h) - along(-h)) / (2.0 * h);
    double exact = 0.0;
    for (std::size_t k = 0; k < n; ++k) exact += g[k] * t[k];
    worst = std::max(worst, std::abs(fd - exact) / std::max(std::abs(exact), scale));
  }
  return worst;
}

}  // namespace tangle
