#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "hyperjump/error.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/simplex.hpp"
#include "hyperjump/weights.hpp"
#include "support/enumerate.hpp"

namespace hyperjump {
namespace {

using testing::graph_of;

// ---- weights --------------------------------------------------------------------

TEST(WeightVector, ExactInvariants) {
  EXPECT_THROW(WeightVector::from_exact({Rational(1, 2), Rational(1, 3)}), DomainError);
  EXPECT_THROW(WeightVector::from_exact({Rational(3, 2), Rational(-1, 2)}), DomainError);
  EXPECT_THROW(WeightVector::from_exact({}), DomainError);
  const WeightVector u = WeightVector::uniform(3);
  EXPECT_EQ(u[0], Rational(1, 3));
  EXPECT_TRUE(u.full_support());
  EXPECT_FALSE(WeightVector::indicator(3, 1).full_support());
  EXPECT_THROW(WeightVector::indicator(3, 3), IndexOutOfRange);
}

TEST(WeightVector, FromFloatsSumsToExactlyOne) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = rng.dirichlet(1 + rng.below(9));
    const WeightVector w = WeightVector::from_floats(x);
    Rational sum = 0;
    double fsum = 0.0;
    Rational convergent_total = 0;
    std::vector<Rational> convergents;
    for (const double xi : x) {
      convergents.push_back(nearest_convergent(xi, 1'000'000));
      EXPECT_LE(convergents.back().get_den(), 1'000'000U);
      convergent_total += convergents.back();
    }
    for (std::size_t i = 0; i < w.dimension(); ++i) {
      EXPECT_GE(sgn(w[i]), 0);
      EXPECT_EQ(w[i], Rational(convergents[i] / convergent_total));
      EXPECT_NEAR(w.approx()[i], x[i], 1e-5);
      sum += w[i];
      fsum += w.approx()[i];
    }
    EXPECT_EQ(sum, 1);
    EXPECT_NEAR(fsum, 1.0, 1e-12);
  }
}

TEST(WeightVector, FromFloatsRecoversSimpleRationals) {
  const std::vector<double> x{1.0 / 3, 2.0 / 39, 1 - 1.0 / 3 - 2.0 / 39};
  const WeightVector w = WeightVector::from_floats(x);
  EXPECT_EQ(w[0], Rational(1, 3));
  EXPECT_EQ(w[1], Rational(2, 39));
}

// ---- simplex ---------------------------------------------------------------------

TEST(Simplex, ProjectionLandsOnSimplexAndFixesSimplexPoints) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(6);
    for (double& v : x) v = 4.0 * rng.uniform() - 2.0;
    project_to_simplex(x);
    double sum = 0.0;
    for (double v : x) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    std::vector<double> again = x;
    project_to_simplex(again);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(again[i], x[i], 1e-15);
  }
  std::vector<double> y{0.3, 5.0, -1.0};
  project_to_simplex(y);
  EXPECT_EQ(y, (std::vector<double>{0.0, 1.0, 0.0}));
}

TEST(Simplex, AscentFindsConcaveMaximum) {
  // -|x - c|^2 with c inside the simplex
  const std::vector<double> c{0.2, 0.5, 0.3};
  const SimplexObjective f = [&](std::span<const double> x, std::span<double> g) {
    double v = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      v -= (x[i] - c[i]) * (x[i] - c[i]);
      if (!g.empty()) g[i] = -2.0 * (x[i] - c[i]);
    }
    return v;
  };
  const AscentResult r = ascend(f, {1.0, 0.0, 0.0});
  EXPECT_TRUE(r.converged);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.point[i], c[i], 1e-8);
}

TEST(Simplex, AscentReachesGradientToleranceOnLagrangians) {
  // flat and degenerate maxima included; rounding noise must not stall the ascent
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const ThreeGraph g = testing::random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
    const SimplexObjective f = [&](std::span<const double> x, std::span<double> grad) {
      return evaluate_p(g, x, grad);
    };
    for (int k = 0; k < 5; ++k) {
      const AscentResult r = ascend(f, rng.dirichlet(static_cast<std::size_t>(n)));
      EXPECT_TRUE(r.converged) << trial << " " << k << " iterations " << r.iterations;
      EXPECT_LT(r.iterations, 5'000);
    }
  }
  const ThreeGraph sharing = testing::two_triples_sharing_pair();
  const SimplexObjective q = [&](std::span<const double> x, std::span<double> grad) {
    const double v = evaluate_p(sharing, x, grad) / 6.0;
    for (double& gi : grad) gi /= 6.0;
    return v;
  };
  for (int k = 0; k < 20; ++k) {
    const AscentResult r = ascend(q, rng.dirichlet(4));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 1.0 / 27.0, 1e-12);
  }
}

// ---- evaluate_p ---------------------------------------------------------------------

TEST(EvaluateP, KnownValues) {
  EXPECT_EQ(evaluate_p(testing::single_triple(), WeightVector::uniform(3)), Rational(2, 9));
  EXPECT_EQ(evaluate_p(testing::k4(), WeightVector::uniform(4)), Rational(3, 8));
  EXPECT_THROW(evaluate_p(testing::k4(), WeightVector::uniform(3)), DimensionMismatch);
}

TEST(EvaluateP, ExactAndFloatAgree) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ThreeGraph g = testing::random_graph(7, 0.4, rng);
    const WeightVector w = WeightVector::from_floats(rng.dirichlet(7));
    EXPECT_NEAR(evaluate_p(g, w.approx()), evaluate_p(g, w).get_d(), 1e-12);
  }
}

TEST(EvaluateP, MonotoneUnderEdgeAddition) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const ThreeGraph small = testing::random_graph(7, 0.2, rng);
    const ThreeGraph big = edge_union(small, testing::random_graph(7, 0.2, rng));
    const WeightVector w = WeightVector::from_floats(rng.dirichlet(7));
    EXPECT_LE(evaluate_p(small, w), evaluate_p(big, w));
  }
}

TEST(EvaluateP, GradientIsSixTimesLinkValueAndMatchesFiniteDifferences) {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6;
    const ThreeGraph g = testing::random_graph(n, 0.5, rng);
    const auto x = rng.dirichlet(n);
    std::vector<double> grad(n);
    evaluate_p(g, x, grad);
    for (int i = 0; i < n; ++i) {
      double link = 0.0;
      for (const Triple& e : g.edges()) {
        if (e[0] == i) link += x[static_cast<std::size_t>(e[1])] * x[static_cast<std::size_t>(e[2])];
        if (e[1] == i) link += x[static_cast<std::size_t>(e[0])] * x[static_cast<std::size_t>(e[2])];
        if (e[2] == i) link += x[static_cast<std::size_t>(e[0])] * x[static_cast<std::size_t>(e[1])];
      }
      EXPECT_NEAR(grad[static_cast<std::size_t>(i)], 6.0 * link, 1e-12);
      const double h = 1e-6;
      auto up = x, down = x;
      up[static_cast<std::size_t>(i)] += h;
      down[static_cast<std::size_t>(i)] -= h;
      const double fd = (evaluate_p(g, up) - evaluate_p(g, down)) / (2 * h);
      EXPECT_NEAR(grad[static_cast<std::size_t>(i)], fd, 1e-6);
    }
  }
}

// ---- maximize_lagrangian -------------------------------------------------------------

TEST(MaximizeLagrangian, KnownValues) {
  const LagrangianEstimate one = maximize_lagrangian(testing::single_triple());
  EXPECT_GE(one.lower_bound, Rational(2, 9));
  EXPECT_NEAR(one.numeric_max, 2.0 / 9.0, 1e-6);
  const LagrangianEstimate k4 = maximize_lagrangian(testing::k4());
  EXPECT_NEAR(k4.numeric_max, 0.375, 1e-6);
  EXPECT_EQ(k4.lower_bound, Rational(3, 8));
  const LagrangianEstimate empty = maximize_lagrangian(ThreeGraph::empty(4));
  EXPECT_EQ(empty.lower_bound, 0);
  EXPECT_THROW(maximize_lagrangian(ThreeGraph::empty(0)), DomainError);
  LagrangianOptions none;
  none.restarts = 0;
  EXPECT_THROW(maximize_lagrangian(testing::k4(), none), DomainError);
}

TEST(MaximizeLagrangian, LowerBoundIsExactEvaluationOfWitness) {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const ThreeGraph g = testing::random_graph(7, 0.3, rng);
    LagrangianOptions o;
    o.restarts = 20;
    o.seed = static_cast<std::uint64_t>(trial);
    const LagrangianEstimate e = maximize_lagrangian(g, o);
    EXPECT_EQ(e.lower_bound, evaluate_p(g, e.witness));
    EXPECT_GE(e.numeric_max, e.lower_bound.get_d() - 1e-9);
    EXPECT_EQ(e.restarts_used, 1 + 7 + 20);  // uniform, vertex and Dirichlet starts
  }
}

TEST(MaximizeLagrangian, DeterministicAndThreadCountIndependent) {
  Rng rng(16);
  const ThreeGraph g = testing::random_graph(8, 0.35, rng);
  LagrangianOptions o;
  o.restarts = 40;
  o.seed = 99;
  const LagrangianEstimate a = maximize_lagrangian(g, o);
  const LagrangianEstimate b = maximize_lagrangian(g, o);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.numeric_max, b.numeric_max);
  ::setenv("HYPERJUMP_THREADS", "1", 1);
  const LagrangianEstimate c = maximize_lagrangian(g, o);
  ::unsetenv("HYPERJUMP_THREADS");
  EXPECT_EQ(a.witness, c.witness);
  EXPECT_EQ(a.numeric_max, c.numeric_max);
}

TEST(MaximizeLagrangian, IsolatedVerticesDoNotChangeTheMaximum) {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const ThreeGraph g = testing::random_graph(5, 0.5, rng);
    const ThreeGraph padded = ThreeGraph::canonicalize(g.edges(), 8);
    LagrangianOptions o;
    o.restarts = 50;
    EXPECT_NEAR(maximize_lagrangian(g, o).numeric_max, maximize_lagrangian(padded, o).numeric_max, 1e-9);
  }
}

TEST(MaximizeLagrangian, WitnessJson) {
  const ThreeGraph g = testing::k4();
  const LagrangianEstimate e = maximize_lagrangian(g);
  const auto doc = nlohmann::json::parse(lagrangian_witness_json(g, e, 5));
  EXPECT_EQ(doc.at("graph_hash"), graph_hash(g));
  EXPECT_EQ(doc.at("lower_bound"), "3/8");
  EXPECT_EQ(doc.at("weights").size(), 4U);
  EXPECT_EQ(doc.at("weights")[0], "1/4");
  EXPECT_EQ(doc.at("seed"), 5);
  EXPECT_EQ(doc.at("restarts"), 1 + 4 + 200);
  EXPECT_NEAR(doc.at("numeric_max").get<double>(), 0.375, 1e-9);
}

// ---- grid oracle ------------------------------------------------------------------------

TEST(GridOracle, KnownValues) {
  EXPECT_GE(grid_oracle(testing::single_triple(), 300), 2.0 / 9.0 - 1e-4);
  EXPECT_LE(grid_oracle(testing::single_triple(), 300), 2.0 / 9.0 + 1e-12);
  EXPECT_NEAR(grid_oracle(graph_of(6, {{0, 1, 2}, {3, 4, 5}}), 300), 2.0 / 9.0, 1e-9);
  EXPECT_EQ(grid_oracle(ThreeGraph::empty(4), 300), 0.0);
  EXPECT_NEAR(grid_oracle(testing::k4(), 200), 0.375, 1e-12);
  EXPECT_THROW(grid_oracle(ThreeGraph::empty(7), 10), CapExceeded);
}

TEST(GridOracle, MatchesBruteLatticeSearch) {
  // Independent lattice maximum by plain nested loops, 4 vertices.
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const ThreeGraph g = testing::random_graph(4, 0.6, rng);
    const int steps = 24;
    double best = 0.0;
    for (int a = 0; a <= steps; ++a)
      for (int b = 0; a + b <= steps; ++b)
        for (int c = 0; a + b + c <= steps; ++c) {
          const std::vector<double> x{a / 24.0, b / 24.0, c / 24.0, (steps - a - b - c) / 24.0};
          best = std::max(best, evaluate_p(g, x));
        }
    EXPECT_NEAR(grid_oracle(g, steps), best, 1e-12);
  }
}

TEST(GridOracle, AgreesWithMaximizerOnSingleTriple) {
  EXPECT_NEAR(maximize_lagrangian(testing::single_triple()).numeric_max, grid_oracle(testing::single_triple(), 300),
              2e-3);
}

// ---- blow-ups ----------------------------------------------------------------------------

TEST(Blowup, KnownValues) {
  const std::vector<long> ones{1, 1, 1};
  EXPECT_EQ(blowup_density(testing::single_triple(), ones), 1);
  const std::vector<long> tens{10, 10, 10};
  EXPECT_EQ(blowup_density(testing::single_triple(), tens), Rational(50, 203)  /* 1000/4060 */);
  std::vector<Triple> star;
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v) star.push_back({u, v, 20});
  const std::vector<long> all_ones(21, 1);
  EXPECT_EQ(blowup_density(graph_of(21, star), all_ones), Rational(1, 7)  /* 190/1330 */);
  EXPECT_THROW(blowup_density(testing::single_triple(), std::vector<long>{1, 1}), DimensionMismatch);
}

TEST(Blowup, TendsToTheLagrangian) {
  const std::vector<long> big{2000, 2000, 2000};
  EXPECT_NEAR(blowup_density(testing::single_triple(), big).get_d(), 2.0 / 9.0, 1e-3);
}

}  // namespace
}  // namespace hyperjump
