#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "hyperjump/graph.hpp"
#include "hyperjump/rational.hpp"
#include "hyperjump/weights.hpp"

namespace hyperjump {

/// p_H(x) = 6 * sum over edges ijk of x_i x_j x_k, exactly.
Rational evaluate_p(const ThreeGraph& graph, const WeightVector& x);

/// Floating p_H(x); when `gradient` is non-empty it receives
/// dp/dx_i = 6 * sum over edges ijk containing i of x_j x_k.
double evaluate_p(const ThreeGraph& graph, std::span<const double> x,
                  std::span<double> gradient = {});

struct LagrangianOptions {
  int restarts = 200;  // random Dirichlet starts, on top of uniform and vertex starts
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  int max_iterations = 50'000;
  std::uint64_t max_denominator = kDefaultMaxDenominator;
};

/// Numeric estimate of lambda(H) with an exactly certified lower bound.
struct LagrangianEstimate {
  Rational lower_bound;   // p_H(witness), exact
  WeightVector witness;
  double numeric_max = 0.0;
  int restarts_used = 0;
  bool converged = false;  // of the run that produced numeric_max
};

/// Restarted projected-gradient ascent of p_H over the simplex. Starts are
/// the uniform point, every vertex indicator, then `restarts` Dirichlet
/// draws seeded with seed + index. Deterministic for fixed options.
LagrangianEstimate maximize_lagrangian(const ThreeGraph& graph, const LagrangianOptions& options = {});

inline constexpr int kDefaultGridVertexCap = 6;

/// Exact maximum of p_H over the lattice points of the simplex with
/// coordinates in (1/steps)Z. CapExceeded above `vertex_cap` vertices.
double grid_oracle(const ThreeGraph& graph, int steps, int vertex_cap = kDefaultGridVertexCap);

/// Edge density of the blow-up with the given part sizes relative to C(n, 3).
Rational blowup_density(const ThreeGraph& graph, std::span<const long> part_sizes);

/// JSON record {graph_hash, weights, lower_bound, numeric_max, restarts, seed}.
std::string lagrangian_witness_json(const ThreeGraph& graph, const LagrangianEstimate& estimate,
                                    std::uint64_t seed);

/// SHA-256 of the canonical ".3g" text of the graph.
std::string graph_hash(const ThreeGraph& graph);

}  // namespace hyperjump
