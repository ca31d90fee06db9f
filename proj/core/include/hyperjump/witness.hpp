#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperjump/cone.hpp"
#include "hyperjump/designs.hpp"
#include "hyperjump/graph.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/rational.hpp"
#include "hyperjump/subsets.hpp"
#include "hyperjump/weights.hpp"

namespace hyperjump {

inline constexpr int kDefaultM = 4;
inline constexpr int kDefaultPairAttempts = 10'000;
inline constexpr int kCertificateVersion = 1;

/// One m-subset U of V(S) whose induced system broke a hypothesis.
struct SubsetFailure {
  std::vector<Vertex> subset;
  bool sparse = true;
  int max_codegree = 0;

  friend bool operator==(const SubsetFailure&, const SubsetFailure&) = default;
};

/// Record that G = cone(S) has p_G > 4/9 at an explicit rational weighting
/// while every checked m-vertex S[U] meets the local cone hypotheses.
struct WitnessCertificate {
  int version = kCertificateVersion;
  int t = 0;
  int m = kDefaultM;
  std::string graph_hash;  // of G
  ThreeGraph system;       // S, kept so the record re-verifies offline
  Rational apex_weight;    // 1/3
  Rational part_weight;    // 2/(3t)
  Rational lower_bound;    // p_G at the weighting
  Rational target{4, 9};
  bool closed_form_path = false;  // |S| = t(t-1)/3
  PolicyKind policy = PolicyKind::exhaustive;  // resolved: exhaustive or sampled
  long samples = 0;                            // sampled mode only
  std::uint64_t sampling_seed = 0;
  long subsets_checked = 0;
  bool all_certified = false;
  std::vector<SubsetFailure> failures;  // sorted by subset
  std::uint64_t root_seed = 0;
  std::uint64_t search_seed = 0;
  int achieved_cogirth = 2;
  int required_cogirth = 3;
  bool edge_disjoint = false;
  bool valid = false;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

struct WitnessOptions {
  int max_attempts = kDefaultPairAttempts;
  SubsetPolicy policy;  // its seed is replaced by a stream of the root seed
};

struct Witness {
  ConeGraph cone;
  InternalSystem system;
  WitnessCertificate certificate;  // draft until both certify steps ran
};

/// G = cone(S) for the internal system on t points. PreconditionFailed for
/// t <= 4; designs errors propagate.
Witness build_witness(int t, int m, std::uint64_t seed, const WitnessOptions& options = {});

/// Draft certificate around a caller-supplied S (any vertex count > 4).
Witness witness_from_system(const ThreeGraph& system, int m, std::uint64_t seed,
                            const WitnessOptions& options = {});

/// p_G(1/3, 2/(3t), ..., 2/(3t)) = 4/9 + 4/(27t) - 16/(27t^2).
Rational closed_form_lower_bound(int t);

struct LowerBoundReport {
  Rational value;
  bool closed_form_path = false;  // |S| = t(t-1)/3
  bool closed_form_matches = false;
  bool exceeds_target = false;          // value > 4/9
  bool exceeds_quarter_square = false;  // |S| > t^2/4, checked on every path
  std::optional<LagrangianEstimate> search;  // when requested
  bool improved = false;                     // search found a larger rational value
};

/// Exact value of p_G at the apex-1/3 weighting. On the closed-form path
/// the value must equal closed_form_lower_bound(t); otherwise only > 4/9 is
/// expected. A positive search_restarts also runs the maximizer on G.
LowerBoundReport certify_lower_bound(const ConeGraph& cone, int t, int search_restarts = 0,
                                     std::uint64_t seed = 0);

struct SmallSubgraphReport {
  ResolvedPolicy policy;
  long subsets_checked = 0;
  std::vector<SubsetFailure> failures;
  bool all_certified = false;
  int spot_checks = 0;
  double spot_check_max = 0.0;  // largest numeric lambda over spot-checked cones
  bool spot_checks_passed = true;
};

/// Checks S[U] sparse with Delta_2 <= 2 for every (or every sampled) U of
/// size min(m, v(S)); each pass certifies lambda <= 4/9 for all subgraphs of
/// cone(S[U]). Optional spot checks maximize lambda(cone(S[U])) numerically
/// on the first few U. DomainError for m < 3.
SmallSubgraphReport certify_small_subgraphs(const ConeGraph& cone, const ThreeGraph& system, int m,
                                            const SubsetPolicy& policy, int spot_checks = 0,
                                            std::uint64_t seed = 0);

/// Fills the draft with both reports and sets valid.
void complete_certificate(WitnessCertificate& certificate, const LowerBoundReport& lower,
                          const SmallSubgraphReport& small);

/// build_witness + certify_lower_bound + certify_small_subgraphs.
Witness run_witness_pipeline(int t, int m, std::uint64_t seed, const WitnessOptions& options = {});

}  // namespace hyperjump
