#include "hyperjump/simplex.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numeric>

namespace hyperjump {

void project_to_simplex(std::span<double> x) {
  if (x.empty()) return;
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  for (auto& xi : x) xi = std::max(xi - theta, 0.0);
}

namespace {

double residual(std::span<const double> x, std::span<const double> grad, std::vector<double>& scratch) {
  scratch.assign(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) scratch[i] += grad[i];
  project_to_simplex(scratch);
  double norm = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) norm += (scratch[i] - x[i]) * (scratch[i] - x[i]);
  return std::sqrt(norm);
}

AscentResult run(const SimplexObjective& objective, std::vector<double> x,
                 const AscentOptions& options, int max_iterations) {
  const std::size_t n = x.size();
  project_to_simplex(x);
  std::vector<double> grad(n), trial(n), trial_grad(n), scratch;
  double value = objective(x, grad);
  double res = residual(x, grad, scratch);
  double step = 1.0;

  AscentResult result;
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (res <= options.tolerance) {
      result.converged = true;
      break;
    }
    // Close to a maximum the objective changes by less than its own rounding
    // error, so Armijo alone stalls well above the gradient tolerance. Inside
    // that noise band a step is taken when it shrinks the projected gradient.
    const double noise = 64.0 * DBL_EPSILON * std::abs(value);
    double alpha = std::min(2.0 * step, 1e6);
    bool accepted = false;
    double trial_value = value;
    double trial_res = res;
    while (alpha > 1e-20) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + alpha * grad[i];
      project_to_simplex(trial);
      double ascent = 0.0;
      for (std::size_t i = 0; i < n; ++i) ascent += grad[i] * (trial[i] - x[i]);
      trial_value = objective(trial, trial_grad);
      trial_res = residual(trial, trial_grad, scratch);
      const bool in_noise = std::abs(trial_value - value) <= noise;
      if (in_noise ? trial_res < 0.999 * res : trial_value >= value + 1e-4 * ascent) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted || trial == x) break;
    x.swap(trial);
    grad.swap(trial_grad);
    value = trial_value;
    res = trial_res;
    step = alpha;
  }
  result.point = std::move(x);
  result.value = value;
  result.iterations = it;
  return result;
}

// Ascent restricted to the face spanned by `support`, embedded back.
AscentResult run_on_face(const SimplexObjective& objective, const std::vector<double>& x,
                         const std::vector<std::size_t>& support, const AscentOptions& options,
                         int max_iterations) {
  std::vector<double> full(x.size(), 0.0), full_grad(x.size(), 0.0);
  const SimplexObjective restricted = [&](std::span<const double> y, std::span<double> grad) {
    std::fill(full.begin(), full.end(), 0.0);
    for (std::size_t k = 0; k < support.size(); ++k) full[support[k]] = y[k];
    const double v = objective(full, full_grad);
    for (std::size_t k = 0; k < support.size(); ++k) grad[k] = full_grad[support[k]];
    return v;
  };
  std::vector<double> start(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) start[k] = x[support[k]];
  AscentResult face = run(restricted, std::move(start), options, max_iterations);
  std::vector<double> embedded(x.size(), 0.0);
  for (std::size_t k = 0; k < support.size(); ++k) embedded[support[k]] = face.point[k];
  face.point = std::move(embedded);
  return face;
}

// Projected gradient crawls when a coordinate's limit is zero but its
// gradient equals the multiplier (coordinates shrink like 1/k). Between
// chunks, the face of coordinates above 1% of the largest is solved on its
// own and kept when it loses no value.
AscentResult run_with_faces(const SimplexObjective& objective, std::vector<double> start,
                            const AscentOptions& options) {
  constexpr int kChunk = 500;
  const int budget = options.max_iterations;
  AscentResult best = run(objective, std::move(start), options, std::min(kChunk, budget));
  int used = best.iterations;
  std::vector<double> grad(best.point.size()), scratch;
  while (!best.converged && used < budget) {
    const double top = *std::max_element(best.point.begin(), best.point.end());
    std::vector<std::size_t> support;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < best.point.size(); ++i) {
      if (best.point[i] > 0.0) ++positive;
      if (best.point[i] > 1e-2 * top) support.push_back(i);
    }
    if (support.size() < positive) {
      AscentResult face = run_on_face(objective, best.point, support, options, std::min(kChunk, budget - used));
      used += face.iterations;
      if (face.value >= best.value - 64.0 * DBL_EPSILON * std::abs(best.value)) {
        objective(face.point, grad);
        face.converged = residual(face.point, grad, scratch) <= options.tolerance;
        best = std::move(face);
        if (best.converged || used >= budget) break;
      }
    }
    AscentResult next = run(objective, best.point, options, std::min(kChunk, budget - used));
    used += next.iterations;
    const bool stalled = next.iterations == 0 && !next.converged;
    if (next.value >= best.value - 64.0 * DBL_EPSILON * std::abs(best.value)) best = std::move(next);
    if (stalled) break;
  }
  best.iterations = used;
  return best;
}

}  // namespace

AscentResult ascend(const SimplexObjective& objective, std::vector<double> start,
                    const AscentOptions& options) {
  AscentResult first = run_with_faces(objective, std::move(start), options);
  if (options.support_floor <= 0.0) return first;

  std::vector<double> shrunk = first.point;
  bool changed = false;
  for (auto& xi : shrunk) {
    if (xi > 0.0 && xi < options.support_floor) {
      xi = 0.0;
      changed = true;
    }
  }
  if (!changed) return first;
  const double mass = std::accumulate(shrunk.begin(), shrunk.end(), 0.0);
  if (mass <= 0.0) return first;
  for (auto& xi : shrunk) xi /= mass;
  AscentResult polished = run_with_faces(objective, std::move(shrunk), options);
  polished.iterations += first.iterations;
  if (polished.value + 1e-15 < first.value) {
    first.iterations = polished.iterations;
    return first;
  }
  return polished;
}

}  // namespace hyperjump
