#include "hyperjump/subsets.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "hyperjump/error.hpp"
#include "hyperjump/random.hpp"

namespace hyperjump {

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::automatic: return "auto";
    case PolicyKind::exhaustive: return "exhaustive";
    case PolicyKind::sampled: return "sampled";
  }
  return "auto";
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "auto") return PolicyKind::automatic;
  if (text == "exhaustive") return PolicyKind::exhaustive;
  if (text == "sampled") return PolicyKind::sampled;
  throw FormatError("unknown subset policy '" + std::string(text) + "'");
}

long subset_count(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long result = 1;
  for (long i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const long factor = n - k + i;
    if (result > LONG_MAX / factor) return LONG_MAX;
    result = result * factor / i;
  }
  return result;
}

ResolvedPolicy resolve_policy(const SubsetPolicy& policy, long n, long k) {
  if (policy.kind != PolicyKind::exhaustive && policy.samples < 1) {
    throw DomainError("sample count must be positive");
  }
  const long total = subset_count(n, k);
  ResolvedPolicy resolved;
  resolved.seed = policy.seed;
  resolved.samples = policy.samples;
  bool exhaustive = policy.kind == PolicyKind::exhaustive;
  if (policy.kind == PolicyKind::automatic) exhaustive = total <= SubsetPolicy::kExhaustiveLimit;
  resolved.exhaustive = exhaustive;
  resolved.count = exhaustive ? total : policy.samples;
  return resolved;
}

void for_each_subset(long n, long k, const ResolvedPolicy& policy,
                     const std::function<void(long, std::span<const Vertex>)>& visit) {
  if (k < 0 || k > n) throw DomainError("subset size out of range");
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  if (policy.exhaustive) {
    for (long i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    for (long index = 0;; ++index) {
      visit(index, subset);
      long i = k - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) return;
      ++subset[static_cast<std::size_t>(i)];
      for (long j = i + 1; j < k; ++j) {
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  Rng rng(policy.seed);
  for (long index = 0; index < policy.count; ++index) {
    // Floyd's algorithm: a uniform k-subset in k draws
    subset.clear();
    for (long j = n - k; j < n; ++j) {
      const auto pick = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(j + 1)));
      if (std::find(subset.begin(), subset.end(), pick) == subset.end()) {
        subset.push_back(pick);
      } else {
        subset.push_back(static_cast<Vertex>(j));
      }
    }
    std::sort(subset.begin(), subset.end());
    visit(index, subset);
  }
}

}  // namespace hyperjump
