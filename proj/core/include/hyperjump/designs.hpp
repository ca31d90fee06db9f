#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperjump/configuration.hpp"
#include "hyperjump/graph.hpp"
#include "hyperjump/subsets.hpp"

namespace hyperjump {

enum class StsMethod { bose, skolem, cyclic, search };

std::string_view to_string(StsMethod method);
/// Throws FormatError on unknown names.
StsMethod parse_sts_method(std::string_view text);

inline constexpr int kMinSupportedOrder = 7;
inline constexpr int kMaxSupportedOrder = 33;
inline constexpr int kCogirthSearchCap = 8;

/// Steiner triple system on [0, t): every pair lies in exactly one triple.
struct SteinerTripleSystem {
  int t = 0;
  ThreeGraph triples;
  StsMethod construction = StsMethod::search;
};

/// Orders t in [7, 33] with t = 1 or 3 (mod 6).
std::vector<int> supported_orders();

/// True when `graph` covers each vertex pair exactly once.
bool is_steiner_triple_system(const ThreeGraph& graph);

/// Bose (t = 3 mod 6), Skolem (t = 1 mod 6) or cyclic (difference-family)
/// construction. WrongResidue when t or the method's residue class is
/// wrong, UnsupportedOrder outside [7, 33] (and for cyclic t = 9, where no
/// cyclic system exists). A seed applies a seeded random relabelling.
SteinerTripleSystem build_sts(int t, StsMethod method, std::optional<std::uint64_t> seed = std::nullopt);

/// Bose or Skolem, whichever matches t.
StsMethod default_method(int t);

/// Maps vertex v to permutation[v]. NotABijection unless permutation is a
/// permutation of [0, t).
SteinerTripleSystem relabel(const SteinerTripleSystem& system, std::span<const Vertex> permutation);

struct StsPair {
  SteinerTripleSystem first;
  SteinerTripleSystem second;
  int achieved_cogirth = 2;
  bool edge_disjoint = false;
  int attempts_used = 0;
};

/// S1 labelled 0 followed by S2 labelled 1; shared triples appear twice.
LabelledTripleSystem labelled_union(const SteinerTripleSystem& first,
                                    const SteinerTripleSystem& second);

bool edge_disjoint(const SteinerTripleSystem& first, const SteinerTripleSystem& second);

/// Largest g <= cap such that no i labelled triples of S1 + S2 with
/// 2 <= i < g span at most i + 1 vertices. DomainError for cap < 3.
int cogirth_of(const SteinerTripleSystem& first, const SteinerTripleSystem& second, int cap);
inline int cogirth_of(const StsPair& pair, int cap) { return cogirth_of(pair.first, pair.second, cap); }

/// Pairs the default construction with random relabellings of a (random)
/// construction, scoring each by cogirth up to target_cogirth. Returns the
/// first pair reaching the target, else the best seen; empty only when
/// max_attempts is 0. Attempt a draws from derive_seed(seed, a).
std::optional<StsPair> search_pair(int t, int target_cogirth, int max_attempts, std::uint64_t seed);

/// Outcome of checking every (or a sample of) m-vertex induced subgraph.
struct LocalCheck {
  ResolvedPolicy policy;
  long subsets_checked = 0;
  std::vector<std::vector<Vertex>> sparsity_failures;  // sorted
  std::vector<std::vector<Vertex>> codegree_failures;  // sorted; Delta_2(S[U]) > 2
};

/// Sparsity (and codegree) of S[U] for all U of size min(m, v(S)). Smaller
/// U need no separate visit: both properties pass to induced subgraphs.
LocalCheck check_local_sparsity(const ThreeGraph& system, int m, const SubsetPolicy& policy);

struct InternalSystemReport {
  int t = 0;
  int m = 0;
  std::size_t edge_count = 0;
  std::size_t expected_edge_count = 0;  // t(t-1)/3
  int max_codegree = 0;
  int min_codegree = 0;
  bool edge_disjoint = false;
  int achieved_cogirth = 2;
  int required_cogirth = 3;  // max(3, C(m,3) + 1)
  int search_target = 3;     // required cogirth capped at kCogirthSearchCap
  bool cogirth_sufficient = false;
  bool exceeds_quarter_square = false;  // |S| > t^2/4
  LocalCheck direct;
  bool direct_check_passed = false;
};

struct InternalSystem {
  ThreeGraph graph;  // S = S1 u S2, duplicates merged
  StsPair pair;
  InternalSystemReport report;
};

/// Builds S from the best pair found and verifies local sparsity directly.
/// A cogirth shortfall is reported, not raised: the direct check governs.
InternalSystem build_internal_system(int t, int m, int max_attempts, std::uint64_t seed,
                                     const SubsetPolicy& policy = {});

/// Required cogirth for m: smallest g > max(2, C(m, 3)).
int required_cogirth(int m);

}  // namespace hyperjump
