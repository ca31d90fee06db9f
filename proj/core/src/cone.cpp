#include "hyperjump/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperjump/error.hpp"
#include "hyperjump/parallel.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/simplex.hpp"
#include "hyperjump/sparsity.hpp"

namespace hyperjump {
namespace {

constexpr double kFourNinthsD = 4.0 / 9.0;
constexpr double kBranchPointD = 5.0 / 9.0;
constexpr double kTauCapD = 2.0 / 27.0;

void require_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside [0, 1]");
  }
}

// q and its gradient (the link values d_i) in floating point.
double q_value(const ThreeGraph& base, std::span<const double> z, std::span<double> d) {
  std::fill(d.begin(), d.end(), 0.0);
  double q = 0.0;
  for (const auto& e : base.edges()) {
    const double a = z[static_cast<std::size_t>(e[0])];
    const double b = z[static_cast<std::size_t>(e[1])];
    const double c = z[static_cast<std::size_t>(e[2])];
    q += a * b * c;
    if (!d.empty()) {
      d[static_cast<std::size_t>(e[0])] += b * c;
      d[static_cast<std::size_t>(e[1])] += a * c;
      d[static_cast<std::size_t>(e[2])] += a * b;
    }
  }
  return q;
}

std::vector<double> start_point(std::size_t k, std::size_t n, std::size_t fixed,
                                std::uint64_t seed) {
  if (k == 0) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  if (k < fixed) {
    std::vector<double> e(n, 0.0);
    e[k - 1] = 1.0;
    return e;
  }
  Rng rng(seed + (k - fixed));
  return rng.dirichlet(n);
}

}  // namespace

ConeGraph build_cone(const ThreeGraph& base) {
  const Vertex apex = base.vertex_count();
  std::vector<Triple> edges = base.edges();
  for (Vertex u = 0; u < apex; ++u)
    for (Vertex v = u + 1; v < apex; ++v) edges.push_back({u, v, apex});
  return {ThreeGraph::canonicalize(edges, apex + 1), base, apex};
}

double tau_root_branch(double rho) {
  require_unit(rho, "rho");
  const double c = 1.0 - rho;
  return c * (1.0 - std::sqrt(c)) / 2.0;
}

double tau(double rho) {
  require_unit(rho, "rho");
  if (rho >= kBranchPointD) return kTauCapD;
  return tau_root_branch(rho);
}

std::optional<Rational> tau_exact(const Rational& rho) {
  if (sgn(rho) < 0 || rho > 1) throw DomainError("rho outside [0, 1]");
  if (rho >= kTauBranchPoint) return kTauCap;
  const Rational c = 1 - rho;
  if (mpz_perfect_square_p(c.get_num_mpz_t()) == 0 || mpz_perfect_square_p(c.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), c.get_den_mpz_t());
  Rational root(num, den);
  root.canonicalize();
  return Rational(c * (1 - root) / 2);
}

double tau_derivative(double rho) {
  require_unit(rho, "rho");
  if (rho >= kBranchPointD) return 0.0;
  return (3.0 * std::sqrt(1.0 - rho) - 2.0) / 4.0;
}

Sqrt3Number rho0() { return {Rational(5, 9), Rational(-2, 9)}; }

Sqrt3Number s0() { return {Rational(1, 3), Rational(1, 3)}; }

Sqrt3Number tau_at_rho0() {
  const Sqrt3Number s = s0();
  return s * s * (Sqrt3Number(1) - s) / Sqrt3Number(2);
}

double phi(double b, double q, double rho) {
  require_unit(b, "b");
  require_unit(rho, "rho");
  if (!(q >= 0.0)) throw DomainError("q must be nonnegative");
  return 3.0 * (1.0 - b) * b * b * (1.0 - rho) + 6.0 * b * b * b * q;
}

ApexOptimum apex_optimum(double q, double rho) {
  require_unit(rho, "rho");
  if (!(q >= 0.0)) throw DomainError("q must be nonnegative");
  const double c = 1.0 - rho;
  const double slack = c - 2.0 * q;
  if (slack > 0.0) {
    const double b0 = 2.0 * c / (3.0 * slack);
    if (b0 <= 1.0) return {b0, 4.0 * c * c * c / (9.0 * slack * slack)};
  }
  // Phi is nondecreasing on [0, 1].
  return {1.0, 6.0 * q};
}

double phi_grid_max(double q, double rho, int points) {
  if (points < 2) throw DomainError("grid needs at least two points");
  double best = 0.0;
  const double c = 1.0 - rho;
  for (int k = 0; k < points; ++k) {
    const double b = static_cast<double>(k) / (points - 1);
    best = std::max(best, 3.0 * (1.0 - b) * b * b * c + 6.0 * b * b * b * q);
  }
  return best;
}

ThresholdReport check_tau_threshold(int samples, std::uint64_t seed, int grid_points) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  ThresholdReport report;
  report.samples = samples;
  report.grid_points = grid_points;
  report.seed = seed;
  report.worst_margin = -std::numeric_limits<double>::infinity();

  Rng rng(seed);
  std::vector<std::pair<double, double>> draws(static_cast<std::size_t>(samples));
  for (auto& [rho, q] : draws) {
    rho = rng.uniform();
    q = rng.uniform() * tau(rho);
  }
  struct Outcome {
    double best;
    double gap;
  };
  std::vector<Outcome> outcomes(draws.size());
  parallel_for(draws.size(), [&](std::size_t i) {
    const auto [rho, q] = draws[i];
    const double grid = phi_grid_max(q, rho, grid_points);
    const double closed = apex_optimum(q, rho).value;
    outcomes[i] = {std::max(grid, closed), std::abs(closed - grid)};
  });
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double margin = outcomes[i].best - kFourNinthsD;
    if (margin > report.worst_margin) {
      report.worst_margin = margin;
      report.worst_rho = draws[i].first;
      report.worst_q = draws[i].second;
    }
    if (margin > 1e-10) ++report.violations;
    report.worst_apex_gap = std::max(report.worst_apex_gap, outcomes[i].gap);
    if (outcomes[i].gap > 1e-8) ++report.apex_mismatches;
  }
  return report;
}

std::pair<Rational, Rational> q_of(const ThreeGraph& base, const WeightVector& z) {
  if (z.dimension() != static_cast<std::size_t>(base.vertex_count())) {
    throw DimensionMismatch("weight dimension does not match v(Q)");
  }
  Rational q = 0;
  for (const auto& e : base.edges()) {
    q += z[static_cast<std::size_t>(e[0])] * z[static_cast<std::size_t>(e[1])] *
         z[static_cast<std::size_t>(e[2])];
  }
  Rational rho = 0;
  for (const auto& zi : z.exact()) rho += zi * zi;
  return {q, rho};
}

ConeProfile cone_profile(const ConeGraph& cone, const WeightVector& x) {
  if (x.dimension() != static_cast<std::size_t>(cone.graph.vertex_count())) {
    throw DimensionMismatch("weight dimension does not match v(cone(Q))");
  }
  const Rational b = 1 - x[static_cast<std::size_t>(cone.apex)];
  if (sgn(b) == 0) throw DomainError("all weight sits on the apex");
  std::vector<Rational> z;
  for (Vertex v = 0; v < cone.apex; ++v) z.push_back(x[static_cast<std::size_t>(v)] / b);
  auto [q, rho] = q_of(cone.base, WeightVector::from_exact(std::move(z)));
  ConeProfile profile{q, rho, std::sqrt(std::max(0.0, 1.0 - rho.get_d())), b.get_d()};
  return profile;
}

std::vector<Rational> weighted_link_values(const ThreeGraph& base, const WeightVector& z) {
  if (z.dimension() != static_cast<std::size_t>(base.vertex_count())) {
    throw DimensionMismatch("weight dimension does not match v(Q)");
  }
  std::vector<Rational> d(z.dimension(), Rational(0));
  for (const auto& e : base.edges()) {
    const auto i = static_cast<std::size_t>(e[0]);
    const auto j = static_cast<std::size_t>(e[1]);
    const auto k = static_cast<std::size_t>(e[2]);
    d[i] += z[j] * z[k];
    d[j] += z[i] * z[k];
    d[k] += z[i] * z[j];
  }
  return d;
}

StationarityConstants stationarity_constants(double s) {
  return {(1.0 - s) * (2.0 - s) / 2.0, (3.0 * s - 2.0) / 4.0, 1.0 - s * s};
}

StationarityReport stationarity_report(const ThreeGraph& base, const WeightVector& z,
                                       double tolerance) {
  if (z.dimension() != static_cast<std::size_t>(base.vertex_count())) {
    throw DimensionMismatch("weight dimension does not match v(Q)");
  }
  if (!z.full_support()) throw SupportError("stationarity needs every z_i > 0");
  const auto& x = z.approx();
  StationarityReport report;
  report.link_values.resize(x.size());
  report.q = q_value(base, x, report.link_values);
  for (const double xi : x) report.rho += xi * xi;
  if (report.rho >= kBranchPointD) {
    throw DomainError("rho = " + std::to_string(report.rho) + " is not below 5/9");
  }
  report.s = std::sqrt(1.0 - report.rho);
  const auto k = stationarity_constants(report.s);
  report.A = k.A;
  report.B = k.B;
  report.mu = 3.0 * report.q - 2.0 * report.B * report.rho;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::abs(report.link_values[i] - 2.0 * report.B * x[i] - report.mu);
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  report.holds = report.max_residual <= tolerance;
  return report;
}

FalsificationResult falsify_q_tau(const ThreeGraph& base, const SearchOptions& options) {
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  const auto n = static_cast<std::size_t>(base.vertex_count());
  if (n == 0) throw DomainError("Q has no vertices");

  FalsificationResult result;
  result.sparse = check_sparse(base).is_sparse;
  result.max_codegree = codegree_profile(base).max_codegree();
  result.hypotheses_violated = !result.sparse || result.max_codegree > 2;

  const SimplexObjective objective = [&base](std::span<const double> z, std::span<double> g) {
    const double q = q_value(base, z, g);
    double rho = 0.0;
    for (const double zi : z) rho += zi * zi;
    rho = std::min(rho, 1.0);
    const double slope = tau_derivative(rho);
    for (std::size_t i = 0; i < z.size(); ++i) g[i] -= 2.0 * slope * z[i];
    return q - tau(rho);
  };
  AscentOptions ascent;
  ascent.tolerance = options.tolerance;
  ascent.max_iterations = options.max_iterations;

  // Vertex indicators are stationary for this objective, so only the
  // uniform point and Dirichlet draws are used.
  const std::size_t total = 1 + static_cast<std::size_t>(options.restarts);
  std::vector<AscentResult> runs(total);
  parallel_for(total, [&](std::size_t k) {
    runs[k] = ascend(objective, start_point(k, n, 1, options.seed), ascent);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < total; ++k) {
    if (runs[k].value > runs[best].value) best = k;
  }
  result.restarts_used = static_cast<int>(total);
  result.best_gap = runs[best].value;
  result.best_point = runs[best].point;
  result.best_converged = runs[best].converged;
  if (result.best_gap > 1e-9) {
    auto z = WeightVector::from_floats(result.best_point);
    auto [q, rho] = q_of(base, z);
    // Confirm on the rounded point with exact q and rho.
    if (q.get_d() - tau(std::min(1.0, rho.get_d())) > 1e-9) result.counterexample = std::move(z);
  }
  return result;
}

OneOver27Report check_one_over_27(const ThreeGraph& base, const SearchOptions& options) {
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  const auto n = static_cast<std::size_t>(base.vertex_count());
  if (n == 0) throw DomainError("Q has no vertices");
  if (!check_sparse(base).is_sparse) throw HypothesisViolated("Q is not sparse");

  const SimplexObjective objective = [&base](std::span<const double> z, std::span<double> g) {
    return q_value(base, z, g);
  };
  AscentOptions ascent;
  ascent.tolerance = options.tolerance;
  ascent.max_iterations = options.max_iterations;

  const std::size_t fixed = 1 + n;
  const std::size_t total = fixed + static_cast<std::size_t>(options.restarts);
  std::vector<AscentResult> runs(total);
  parallel_for(total, [&](std::size_t k) {
    runs[k] = ascend(objective, start_point(k, n, fixed, options.seed), ascent);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < total; ++k) {
    if (runs[k].value > runs[best].value) best = k;
  }
  OneOver27Report report;
  report.restarts_used = static_cast<int>(total);
  report.witness = WeightVector::from_floats(runs[best].point);
  report.witness_q = q_of(base, report.witness).first;
  report.max_q = std::max(runs[best].value, report.witness_q.get_d());
  report.holds = report.max_q <= 1.0 / 27.0 + 1e-9;
  return report;
}

double low_rho_s_min() { return (1.0 + std::sqrt(3.0)) / 3.0; }

InequalityCheck necessary_counterexample_inequality(long n, double s) {
  if (n < 3) throw DomainError("N must be >= 3");
  if (!(s > low_rho_s_min() && s < 1.0)) {
    throw DomainError("s = " + std::to_string(s) + " outside ((1 + sqrt 3)/3, 1)");
  }
  const auto k = stationarity_constants(s);
  InequalityCheck check;
  check.lhs = static_cast<double>(n) * k.A + 2.0 * k.B;
  check.rhs = k.rho * std::sqrt(3.0 * static_cast<double>(n) - 6.0);
  check.violated = check.lhs < check.rhs;
  return check;
}

InequalitySweep inequality_sweep(long n_max, int s_points) {
  if (n_max < 3 || s_points < 1) throw DomainError("sweep needs n_max >= 3 and s_points >= 1");
  InequalitySweep sweep;
  sweep.n_max = n_max;
  sweep.s_points = s_points;
  sweep.min_margin = std::numeric_limits<double>::infinity();
  const double s_min = low_rho_s_min();
  for (int k = 1; k <= s_points; ++k) {
    const double s = s_min + (1.0 - s_min) * k / (s_points + 1);
    for (long n = 3; n <= n_max; ++n) {
      const auto check = necessary_counterexample_inequality(n, s);
      ++sweep.evaluations;
      if (check.violated) ++sweep.violations;
      const double margin = check.lhs - check.rhs;
      if (margin < sweep.min_margin) {
        sweep.min_margin = margin;
        sweep.worst_n = n;
        sweep.worst_s = s;
      }
    }
  }
  return sweep;
}

IdentityReport algebra_identities(const Rational& s) {
  if (sgn(s) < 0 || s > 1) throw DomainError("s outside [0, 1]");
  IdentityReport r;
  r.s = s;
  r.A = (1 - s) * (2 - s) / 2;
  r.B = (3 * s - 2) / 4;
  r.rho = 1 - s * s;
  r.lhs = 8 * r.A * (r.A + r.B) - 3 * r.rho * r.rho;
  r.g = s * s * s + 10 * s * s - 11 * s + 1;
  r.g_prime = 3 * s * s + 20 * s - 11;
  r.rhs = (1 - s) * r.g;
  r.identity_holds = r.lhs == r.rhs;
  // s >= (1 + sqrt 3)/3  <=>  3s - 1 >= sqrt 3  <=>  3s - 1 >= 0 and (3s - 1)^2 >= 3.
  const Rational t = 3 * s - 1;
  r.above_threshold = sgn(t) >= 0 && t * t >= 3;
  r.sign_claims_hold = !r.above_threshold || (sgn(r.g) > 0 && sgn(r.g_prime) > 0);
  return r;
}

IdentitySweep identity_sweep(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  IdentitySweep sweep;
  sweep.samples = samples;
  sweep.seed = seed;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto den = 2 + rng.below(999'999);
    const auto num = 1 + rng.below(den - 1);
    Rational s(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    s.canonicalize();
    const auto report = algebra_identities(s);
    if (!report.identity_holds) ++sweep.identity_failures;
    if (!report.sign_claims_hold) ++sweep.sign_failures;
    if (report.above_threshold) ++sweep.above_threshold;
  }
  return sweep;
}

Sqrt3Number g_at_threshold() {
  const Sqrt3Number s = s0();
  return s * s * s + Sqrt3Number(10) * s * s - Sqrt3Number(11) * s + Sqrt3Number(1);
}

ConeBoundCertificate certify_cone_bound(const ThreeGraph& base, bool numeric_check,
                                        const LagrangianOptions& numeric) {
  ConeBoundCertificate cert;
  cert.sparse = check_sparse(base).is_sparse;
  cert.max_codegree = codegree_profile(base).max_codegree();
  if (!cert.sparse || cert.max_codegree > 2) return cert;
  cert.status = ConeBoundStatus::certified;
  if (numeric_check) {
    const auto estimate = maximize_lagrangian(build_cone(base).graph, numeric);
    cert.numeric_max = estimate.numeric_max;
    cert.cross_check_passed = estimate.numeric_max <= kFourNinthsD + 1e-6;
  }
  return cert;
}

}  // namespace hyperjump
