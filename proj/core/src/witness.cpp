#include "hyperjump/witness.hpp"

#include <algorithm>
#include <string>

#include "hyperjump/error.hpp"
#include "hyperjump/parallel.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/sparsity.hpp"

namespace hyperjump {

namespace {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

WitnessCertificate draft_for(const ConeGraph& cone, const InternalSystem& system, int m, std::uint64_t seed) {
  WitnessCertificate cert;
  cert.t = static_cast<int>(system.graph.vertex_count());
  cert.m = m;
  cert.graph_hash = graph_hash(cone.graph);
  cert.system = system.graph;
  cert.apex_weight = make_rational(1, 3);
  cert.part_weight = make_rational(2, 3L * cert.t);
  cert.root_seed = seed;
  cert.search_seed = derive_seed(seed, "designs.search_pair");
  cert.sampling_seed = derive_seed(seed, "witness.sampling");
  cert.achieved_cogirth = system.report.achieved_cogirth;
  cert.required_cogirth = system.report.required_cogirth;
  cert.edge_disjoint = system.report.edge_disjoint;
  return cert;
}

}  // namespace

Witness build_witness(int t, int m, std::uint64_t seed, const WitnessOptions& options) {
  if (t <= 4) throw PreconditionFailed("witness needs t > 4, got t = " + std::to_string(t));
  if (m < 3) throw DomainError("m must be at least 3");
  SubsetPolicy policy = options.policy;
  policy.seed = derive_seed(seed, "witness.sampling");
  Witness w;
  w.system = build_internal_system(t, m, options.max_attempts, seed, policy);
  w.cone = build_cone(w.system.graph);
  w.certificate = draft_for(w.cone, w.system, m, seed);
  return w;
}

Witness witness_from_system(const ThreeGraph& system, int m, std::uint64_t seed, const WitnessOptions&) {
  const int t = static_cast<int>(system.vertex_count());
  if (t <= 4) throw PreconditionFailed("witness needs t > 4, got t = " + std::to_string(t));
  if (m < 3) throw DomainError("m must be at least 3");
  Witness w;
  w.system.graph = system;
  InternalSystemReport& r = w.system.report;
  r.t = t;
  r.m = m;
  r.edge_count = system.edge_count();
  r.expected_edge_count = static_cast<std::size_t>(t) * static_cast<std::size_t>(t - 1) / 3;
  const CodegreeProfile profile(system);
  r.max_codegree = profile.max_codegree();
  r.min_codegree = profile.min_codegree();
  r.required_cogirth = required_cogirth(m);
  r.exceeds_quarter_square = 4 * r.edge_count > static_cast<std::size_t>(t) * static_cast<std::size_t>(t);
  w.cone = build_cone(system);
  w.certificate = draft_for(w.cone, w.system, m, seed);
  return w;
}

Rational closed_form_lower_bound(int t) {
  if (t <= 0) throw DomainError("t must be positive");
  Rational value = Rational(4, 9) + make_rational(4, 27L * t) - make_rational(16, 27L * t * t);
  value.canonicalize();
  return value;
}

LowerBoundReport certify_lower_bound(const ConeGraph& cone, int t, int search_restarts, std::uint64_t seed) {
  if (cone.base.vertex_count() != t) throw DimensionMismatch("cone base does not have t vertices");
  if (t <= 0) throw DomainError("t must be positive");
  const Vertex n = cone.graph.vertex_count();
  std::vector<Rational> weights(static_cast<std::size_t>(n), make_rational(2, 3L * t));
  weights[static_cast<std::size_t>(cone.apex)] = make_rational(1, 3);
  const WeightVector x = WeightVector::from_exact(weights);

  LowerBoundReport report;
  report.value = evaluate_p(cone.graph, x);
  const auto edges = cone.base.edge_count();
  const auto tt = static_cast<std::size_t>(t);
  report.closed_form_path = 3 * edges == tt * (tt - 1);
  report.closed_form_matches = report.closed_form_path && report.value == closed_form_lower_bound(t);
  report.exceeds_target = report.value > kFourNinths;
  report.exceeds_quarter_square = 4 * edges > tt * tt;
  if (search_restarts > 0) {
    LagrangianOptions options;
    options.restarts = search_restarts;
    options.seed = derive_seed(seed, "witness.lower_bound_search");
    report.search = maximize_lagrangian(cone.graph, options);
    report.improved = report.search->lower_bound > report.value;
  }
  return report;
}

SmallSubgraphReport certify_small_subgraphs(const ConeGraph& cone, const ThreeGraph& system, int m,
                                            const SubsetPolicy& policy, int spot_checks, std::uint64_t seed) {
  if (m < 3) throw DomainError("m must be at least 3");
  if (cone.base.vertex_count() != system.vertex_count()) {
    throw DimensionMismatch("cone base and system differ in vertex count");
  }
  const LocalCheck check = check_local_sparsity(system, m, policy);
  SmallSubgraphReport report;
  report.policy = check.policy;
  report.subsets_checked = check.subsets_checked;

  std::vector<std::vector<Vertex>> failed = check.sparsity_failures;
  failed.insert(failed.end(), check.codegree_failures.begin(), check.codegree_failures.end());
  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  for (auto& u : failed) {
    SubsetFailure f;
    f.sparse = !std::binary_search(check.sparsity_failures.begin(), check.sparsity_failures.end(), u);
    f.max_codegree = CodegreeProfile(induced_subgraph(system, u)).max_codegree();
    f.subset = std::move(u);
    report.failures.push_back(std::move(f));
  }
  report.all_certified = report.failures.empty();

  if (spot_checks > 0) {
    // Cross-check only: numeric optimization cannot certify an upper bound.
    ResolvedPolicy sample;
    sample.exhaustive = false;
    sample.count = spot_checks;
    sample.seed = derive_seed(seed, "witness.spot_checks");
    const long k = std::min<long>(m, system.vertex_count());
    std::vector<std::vector<Vertex>> subsets;
    for_each_subset(system.vertex_count(), k, sample,
                    [&](long, std::span<const Vertex> u) { subsets.emplace_back(u.begin(), u.end()); });
    std::vector<double> values(subsets.size(), 0.0);
    parallel_for(subsets.size(), [&](std::size_t i) {
      LagrangianOptions options;
      options.restarts = 20;
      options.seed = derive_seed(sample.seed, static_cast<std::uint64_t>(i));
      values[i] = maximize_lagrangian(build_cone(induced_subgraph(system, subsets[i])).graph, options).numeric_max;
    });
    report.spot_checks = static_cast<int>(values.size());
    for (double v : values) report.spot_check_max = std::max(report.spot_check_max, v);
    report.spot_checks_passed = report.spot_check_max <= 4.0 / 9.0 + 1e-6;
  }
  return report;
}

void complete_certificate(WitnessCertificate& certificate, const LowerBoundReport& lower,
                          const SmallSubgraphReport& small) {
  certificate.lower_bound = lower.value;
  certificate.closed_form_path = lower.closed_form_path;
  certificate.policy = small.policy.exhaustive ? PolicyKind::exhaustive : PolicyKind::sampled;
  certificate.samples = small.policy.exhaustive ? 0 : small.policy.samples;
  certificate.sampling_seed = small.policy.seed;
  certificate.subsets_checked = small.subsets_checked;
  certificate.failures = small.failures;
  certificate.all_certified = small.all_certified;
  certificate.valid = certificate.lower_bound > certificate.target && certificate.all_certified;
}

Witness run_witness_pipeline(int t, int m, std::uint64_t seed, const WitnessOptions& options) {
  Witness w = build_witness(t, m, seed, options);
  SubsetPolicy policy = options.policy;
  policy.seed = w.certificate.sampling_seed;
  const LowerBoundReport lower = certify_lower_bound(w.cone, t);
  const SmallSubgraphReport small = certify_small_subgraphs(w.cone, w.system.graph, m, policy);
  complete_certificate(w.certificate, lower, small);
  return w;
}

}  // namespace hyperjump
