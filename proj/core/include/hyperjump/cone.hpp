#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperjump/graph.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/rational.hpp"
#include "hyperjump/sqrt3.hpp"
#include "hyperjump/weights.hpp"

namespace hyperjump {

/// cone(Q): Q plus an apex v0 = v(Q) joined to every pair of V(Q).
struct ConeGraph {
  ThreeGraph graph;
  ThreeGraph base;
  Vertex apex = 0;
};

ConeGraph build_cone(const ThreeGraph& base);

inline const Rational kFourNinths{4, 9};
inline const Rational kTauCap{2, 27};
inline const Rational kTauBranchPoint{5, 9};

// ---- threshold tau(rho) ---------------------------------------------------

/// Largest q for which max over the apex weight of Phi stays <= 4/9:
/// (1-rho)(1-sqrt(1-rho))/2 on [0, 5/9], and 2/27 on [5/9, 1] (rho = 5/9
/// takes the constant branch). DomainError outside [0, 1].
double tau(double rho);

/// Exact tau when it is rational, i.e. rho >= 5/9 or 1 - rho a rational square.
std::optional<Rational> tau_exact(const Rational& rho);

/// The square-root branch evaluated anywhere on [0, 1].
double tau_root_branch(double rho);

/// tau'(rho) = (3 sqrt(1-rho) - 2)/4 below 5/9; 0 from 5/9 on (the
/// subgradient chosen at the kink).
double tau_derivative(double rho);

/// rho0 = (5 - 2 sqrt 3)/9, where tau(rho0) = 1/27.
Sqrt3Number rho0();
/// sqrt(1 - rho0) = (1 + sqrt 3)/3.
Sqrt3Number s0();
/// tau(rho0) evaluated exactly as s0^2 (1 - s0)/2.
Sqrt3Number tau_at_rho0();

// ---- apex polynomial --------------------------------------------------------

/// Phi(b) = 3(1-b) b^2 (1-rho) + 6 b^3 q.
double phi(double b, double q, double rho);

struct ApexOptimum {
  double b = 0.0;
  double value = 0.0;
};

/// Maximiser of Phi over b in [0, 1]: the interior critical point
/// b0 = 2c/(3(c-2q)) with value 4c^3/(9(c-2q)^2) when c - 2q > 0 and
/// b0 <= 1 (c = 1 - rho), otherwise the endpoint b = 1 with value 6q.
ApexOptimum apex_optimum(double q, double rho);

/// max of Phi over the grid b = k/(points-1), k = 0..points-1.
double phi_grid_max(double q, double rho, int points);

struct ThresholdReport {
  int samples = 0;
  int grid_points = 0;
  std::uint64_t seed = 0;
  double worst_margin = 0.0;    // max over samples of (max_b Phi) - 4/9
  int violations = 0;           // samples with max_b Phi > 4/9 + 1e-10
  double worst_apex_gap = 0.0;  // max |apex_optimum - grid max|
  int apex_mismatches = 0;      // gaps above 1e-8
  double worst_rho = 0.0;
  double worst_q = 0.0;
};

/// Samples rho ~ U[0,1], q ~ U[0, tau(rho)] and checks max_b Phi <= 4/9.
ThresholdReport check_tau_threshold(int samples, std::uint64_t seed, int grid_points = 10'000);

// ---- weighted quantities of Q ------------------------------------------------

/// q = sum over edges of z_i z_j z_k and rho = sum z_i^2, exactly.
std::pair<Rational, Rational> q_of(const ThreeGraph& base, const WeightVector& z);

struct ConeProfile {
  Rational q;
  Rational rho;
  double s = 0.0;  // sqrt(1 - rho)
  double b = 0.0;  // total weight off the apex
};

/// Splits a weighting x of cone(Q) into b and z = x|Q / b. DomainError if b = 0.
ConeProfile cone_profile(const ConeGraph& cone, const WeightVector& x);

/// d_i = sum over edges ijk of z_j z_k, exactly.
std::vector<Rational> weighted_link_values(const ThreeGraph& base, const WeightVector& z);

struct StationarityReport {
  double q = 0.0;
  double rho = 0.0;
  double s = 0.0;
  double A = 0.0;
  double B = 0.0;
  double mu = 0.0;  // 3q - 2 B rho
  std::vector<double> link_values;
  std::vector<double> residuals;  // |d_i - 2 B z_i - mu|
  double max_residual = 0.0;
  bool holds = false;
};

/// Stationarity of F = q - tau(rho) at a full-support z with rho < 5/9.
/// SupportError on a zero coordinate, DomainError when rho >= 5/9.
StationarityReport stationarity_report(const ThreeGraph& base, const WeightVector& z,
                                       double tolerance = 1e-6);

// ---- searches over the simplex ---------------------------------------------

struct SearchOptions {
  int restarts = 200;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  int max_iterations = 50'000;
};

struct FalsificationResult {
  bool hypotheses_violated = false;
  bool sparse = true;
  int max_codegree = 0;
  double best_gap = 0.0;  // max found of q - tau(rho)
  std::vector<double> best_point;
  bool best_converged = false;
  std::optional<WeightVector> counterexample;  // z with q - tau(rho) > 1e-9
  int restarts_used = 0;
};

/// Restarted ascent of q(z) - tau(rho(z)). Runs on any Q; flags graphs that
/// are not sparse or have codegree above 2.
FalsificationResult falsify_q_tau(const ThreeGraph& base, const SearchOptions& options = {});

struct OneOver27Report {
  double max_q = 0.0;
  WeightVector witness = WeightVector::uniform(1);
  Rational witness_q;  // exact q at the rounded witness
  bool holds = false;  // max_q <= 1/27 + 1e-9
  int restarts_used = 0;
};

/// Restarted maximisation of q over the simplex. HypothesisViolated unless Q is sparse.
OneOver27Report check_one_over_27(const ThreeGraph& base, const SearchOptions& options = {});

// ---- low-rho inequality chain -----------------------------------------------

/// A = (1-s)(2-s)/2, B = (3s-2)/4, rho = 1 - s^2.
struct StationarityConstants {
  double A;
  double B;
  double rho;
};
StationarityConstants stationarity_constants(double s);

/// Lower limit (1 + sqrt 3)/3 of s in the low-rho region.
double low_rho_s_min();

struct InequalityCheck {
  double lhs = 0.0;  // N A + 2 B
  double rhs = 0.0;  // rho sqrt(3N - 6)
  bool violated = false;  // lhs < rhs
};

/// DomainError unless N >= 3 and (1 + sqrt 3)/3 < s < 1.
InequalityCheck necessary_counterexample_inequality(long n, double s);

struct InequalitySweep {
  long n_min = 3;
  long n_max = 0;
  int s_points = 0;
  long evaluations = 0;
  long violations = 0;
  double min_margin = 0.0;  // min of lhs - rhs
  long worst_n = 0;
  double worst_s = 0.0;
};

/// N in [3, n_max] times s_k = s_min + (1 - s_min) k/(s_points + 1), k = 1..s_points.
InequalitySweep inequality_sweep(long n_max, int s_points);

struct IdentityReport {
  Rational s, A, B, rho;
  Rational lhs;  // 8A(A+B) - 3 rho^2
  Rational rhs;  // (1-s)(s^3 + 10 s^2 - 11 s + 1)
  bool identity_holds = false;
  Rational g, g_prime;
  bool above_threshold = false;  // s >= (1 + sqrt 3)/3, decided exactly
  bool sign_claims_hold = true;  // g > 0 and g' > 0 whenever above_threshold
};

/// Exact evaluation at rational s in [0, 1].
IdentityReport algebra_identities(const Rational& s);

struct IdentitySweep {
  int samples = 0;
  int identity_failures = 0;
  int sign_failures = 0;
  int above_threshold = 0;
  std::uint64_t seed = 0;
};

/// algebra_identities at `samples` random rationals in (0, 1).
IdentitySweep identity_sweep(int samples, std::uint64_t seed);

/// g(s) = s^3 + 10 s^2 - 11 s + 1 at s = (1 + sqrt 3)/3, exactly.
Sqrt3Number g_at_threshold();

// ---- cone certificate ------------------------------------------------------

enum class ConeBoundStatus { certified, not_applicable };

struct ConeBoundCertificate {
  ConeBoundStatus status = ConeBoundStatus::not_applicable;
  bool sparse = false;
  int max_codegree = 0;
  std::optional<double> numeric_max;  // lambda(cone(Q)) estimate when cross-checked
  bool cross_check_passed = true;     // numeric_max <= 4/9 + 1e-6
};

/// CERTIFIED iff Q is sparse with codegree at most 2. With `numeric_check`,
/// a certified graph additionally has lambda(cone(Q)) estimated numerically.
ConeBoundCertificate certify_cone_bound(const ThreeGraph& base, bool numeric_check = true,
                                        const LagrangianOptions& numeric = {});

}  // namespace hyperjump
