#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hyperjump {

/// Euclidean projection onto {x >= 0, sum x = 1}, in place (sort-based).
void project_to_simplex(std::span<double> x);

/// Objective evaluated on the simplex: returns f(x) and writes grad f(x).
using SimplexObjective = std::function<double(std::span<const double>, std::span<double>)>;

struct AscentOptions {
  double tolerance = 1e-10;  // on |P(x + grad) - x|
  int max_iterations = 50'000;
  /// After convergence, coordinates below this are zeroed and the point is
  /// polished by a second ascent run; 0 disables.
  double support_floor = 1e-9;
};

struct AscentResult {
  std::vector<double> point;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Projected gradient ascent with Armijo backtracking from `start`.
AscentResult ascend(const SimplexObjective& objective, std::vector<double> start,
                    const AscentOptions& options = {});

}  // namespace hyperjump
