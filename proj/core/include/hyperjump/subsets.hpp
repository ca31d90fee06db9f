#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "hyperjump/graph.hpp"

namespace hyperjump {

enum class PolicyKind { automatic, exhaustive, sampled };

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view text);

/// How k-subsets of [0, n) are visited. `automatic` enumerates every subset
/// when there are at most kExhaustiveLimit of them and samples otherwise.
struct SubsetPolicy {
  static constexpr long kExhaustiveLimit = 1'000'000;
  static constexpr long kDefaultSamples = 100'000;

  PolicyKind kind = PolicyKind::automatic;
  long samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

/// The policy after `automatic` has been decided for a concrete (n, k).
struct ResolvedPolicy {
  bool exhaustive = true;
  long count = 0;  // subsets that will be visited
  long samples = 0;
  std::uint64_t seed = 0;
};

/// C(n, k) saturated at LONG_MAX.
long subset_count(long n, long k);

ResolvedPolicy resolve_policy(const SubsetPolicy& policy, long n, long k);

/// Visits k-subsets of [0, n) in ascending form: all of them in
/// lexicographic order, or `samples` seeded uniform draws.
void for_each_subset(long n, long k, const ResolvedPolicy& policy,
                     const std::function<void(long index, std::span<const Vertex>)>& visit);

}  // namespace hyperjump
