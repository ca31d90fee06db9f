#include "hyperjump/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "hyperjump/digest.hpp"
#include "hyperjump/error.hpp"
#include "hyperjump/io.hpp"
#include "hyperjump/parallel.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/simplex.hpp"

namespace hyperjump {

Rational evaluate_p(const ThreeGraph& graph, const WeightVector& x) {
  if (x.dimension() != static_cast<std::size_t>(graph.vertex_count())) {
    throw DimensionMismatch("weight dimension " + std::to_string(x.dimension()) +
                            " != vertex count " + std::to_string(graph.vertex_count()));
  }
  Rational sum = 0;
  for (const auto& e : graph.edges()) {
    sum += x[static_cast<std::size_t>(e[0])] * x[static_cast<std::size_t>(e[1])] *
           x[static_cast<std::size_t>(e[2])];
  }
  return 6 * sum;
}

double evaluate_p(const ThreeGraph& graph, std::span<const double> x, std::span<double> gradient) {
  if (x.size() != static_cast<std::size_t>(graph.vertex_count()) ||
      (!gradient.empty() && gradient.size() != x.size())) {
    throw DimensionMismatch("weight dimension does not match vertex count");
  }
  std::fill(gradient.begin(), gradient.end(), 0.0);
  double sum = 0.0;
  for (const auto& e : graph.edges()) {
    const double a = x[static_cast<std::size_t>(e[0])];
    const double b = x[static_cast<std::size_t>(e[1])];
    const double c = x[static_cast<std::size_t>(e[2])];
    sum += a * b * c;
    if (!gradient.empty()) {
      gradient[static_cast<std::size_t>(e[0])] += 6.0 * b * c;
      gradient[static_cast<std::size_t>(e[1])] += 6.0 * a * c;
      gradient[static_cast<std::size_t>(e[2])] += 6.0 * a * b;
    }
  }
  return 6.0 * sum;
}

LagrangianEstimate maximize_lagrangian(const ThreeGraph& graph, const LagrangianOptions& options) {
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  if (n == 0) throw DomainError("cannot optimise over an empty vertex set");

  const std::size_t fixed_starts = 1 + n;
  const std::size_t total = fixed_starts + static_cast<std::size_t>(options.restarts);
  const SimplexObjective objective = [&graph](std::span<const double> x, std::span<double> g) {
    return evaluate_p(graph, x, g);
  };
  AscentOptions ascent;
  ascent.tolerance = options.tolerance;
  ascent.max_iterations = options.max_iterations;

  std::vector<AscentResult> runs(total);
  parallel_for(total, [&](std::size_t k) {
    std::vector<double> start;
    if (k == 0) {
      start.assign(n, 1.0 / static_cast<double>(n));
    } else if (k < fixed_starts) {
      start.assign(n, 0.0);
      start[k - 1] = 1.0;
    } else {
      Rng rng(options.seed + (k - fixed_starts));
      start = rng.dirichlet(n);
    }
    runs[k] = ascend(objective, std::move(start), ascent);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < total; ++k) {
    if (runs[k].value > runs[best].value) best = k;
  }

  auto witness = WeightVector::from_floats(runs[best].point, options.max_denominator);
  LagrangianEstimate estimate{evaluate_p(graph, witness), std::move(witness), runs[best].value,
                              static_cast<int>(total), runs[best].converged};
  // Rounding may land marginally above the float optimum.
  estimate.numeric_max = std::max(estimate.numeric_max, estimate.lower_bound.get_d());
  return estimate;
}

namespace {

// Exhaustive lattice maximisation. p_H is multilinear, so it is stored as a
// dense coefficient table over vertex subsets and coordinates are
// substituted one at a time; the last two coordinates lie on a segment where
// p_H is a concave quadratic in the integer step, maximised in closed form.
class LatticeMaximizer {
 public:
  LatticeMaximizer(const ThreeGraph& graph, int steps)
      : n_(graph.vertex_count()), steps_(steps), inv_(1.0 / steps) {
    levels_.resize(static_cast<std::size_t>(n_) + 1);
    levels_[0].assign(std::size_t{1} << n_, 0.0);
    for (const auto& e : graph.edges()) {
      levels_[0][(1u << e[0]) | (1u << e[1]) | (1u << e[2])] = 6.0;
    }
  }

  double run() {
    if (n_ < 3) return 0.0;
    recurse(0, steps_);
    return best_;
  }

 private:
  void recurse(int var, int remaining) {
    const auto& coeffs = levels_[static_cast<std::size_t>(var)];
    if (var == n_ - 2) {
      leaf(coeffs, remaining);
      return;
    }
    auto& next = levels_[static_cast<std::size_t>(var) + 1];
    next.resize(coeffs.size() / 2);
    for (int k = 0; k <= remaining; ++k) {
      const double value = k * inv_;
      for (std::size_t m = 0; m < next.size(); ++m) next[m] = coeffs[2 * m] + value * coeffs[2 * m + 1];
      recurse(var + 1, remaining - k);
    }
  }

  // f(k) = c0 + cu*k/S + cw*(r-k)/S + cuw*k*(r-k)/S^2 on integers 0..r.
  void leaf(const std::vector<double>& c, int r) {
    auto f = [&](long k) {
      const double u = static_cast<double>(k) * inv_;
      const double w = static_cast<double>(r - k) * inv_;
      return c[0] + c[1] * u + c[2] * w + c[3] * u * w;
    };
    double local = std::max(f(0), f(r));
    if (c[3] > 0.0) {
      const double vertex = 0.5 * r + (c[1] - c[2]) * steps_ / (2.0 * c[3]);
      const auto lo = static_cast<long>(std::floor(vertex));
      for (long k = lo; k <= lo + 1; ++k) {
        if (k >= 0 && k <= r) local = std::max(local, f(k));
      }
    }
    best_ = std::max(best_, local);
  }

  int n_;
  int steps_;
  double inv_;
  std::vector<std::vector<double>> levels_;
  double best_ = 0.0;
};

}  // namespace

double grid_oracle(const ThreeGraph& graph, int steps, int vertex_cap) {
  if (steps < 1) throw DomainError("grid oracle needs steps >= 1");
  if (graph.vertex_count() > vertex_cap || graph.vertex_count() > 20) {
    throw CapExceeded("grid oracle limited to " + std::to_string(vertex_cap) + " vertices");
  }
  return LatticeMaximizer(graph, steps).run();
}

Rational blowup_density(const ThreeGraph& graph, std::span<const long> part_sizes) {
  if (part_sizes.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw DimensionMismatch("one part size per vertex required");
  }
  mpz_class total = 0;
  for (const long s : part_sizes) {
    if (s <= 0) throw DomainError("part sizes must be positive");
    total += s;
  }
  if (total < 3) throw DomainError("blow-up has fewer than three vertices");
  mpz_class edges = 0;
  for (const auto& e : graph.edges()) {
    edges += mpz_class(part_sizes[static_cast<std::size_t>(e[0])]) *
             part_sizes[static_cast<std::size_t>(e[1])] * part_sizes[static_cast<std::size_t>(e[2])];
  }
  mpz_class triples;
  mpz_bin_ui(triples.get_mpz_t(), total.get_mpz_t(), 3);
  Rational density(edges, triples);
  density.canonicalize();
  return density;
}

std::string graph_hash(const ThreeGraph& graph) { return sha256_hex(format_3g(graph)); }

std::string lagrangian_witness_json(const ThreeGraph& graph, const LagrangianEstimate& estimate,
                                    std::uint64_t seed) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : estimate.witness.exact()) weights.push_back(to_string(w));
  nlohmann::json record = {
      {"graph_hash", graph_hash(graph)},
      {"weights", weights},
      {"lower_bound", to_string(estimate.lower_bound)},
      {"numeric_max", estimate.numeric_max},
      {"restarts", estimate.restarts_used},
      {"seed", seed},
  };
  return record.dump(2);
}

}  // namespace hyperjump
