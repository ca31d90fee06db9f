#include "hyperjump/designs.hpp"

#include <algorithm>
#include <string>

#include "hyperjump/error.hpp"
#include "hyperjump/parallel.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/sparsity.hpp"

namespace hyperjump {

std::string_view to_string(StsMethod method) {
  switch (method) {
    case StsMethod::bose: return "bose";
    case StsMethod::skolem: return "skolem";
    case StsMethod::cyclic: return "cyclic";
    case StsMethod::search: return "search";
  }
  return "search";
}

StsMethod parse_sts_method(std::string_view text) {
  if (text == "bose") return StsMethod::bose;
  if (text == "skolem") return StsMethod::skolem;
  if (text == "cyclic") return StsMethod::cyclic;
  if (text == "search") return StsMethod::search;
  throw FormatError("unknown construction '" + std::string(text) + "'");
}

std::vector<int> supported_orders() {
  std::vector<int> orders;
  for (int t = kMinSupportedOrder; t <= kMaxSupportedOrder; ++t) {
    if (t % 6 == 1 || t % 6 == 3) orders.push_back(t);
  }
  return orders;
}

bool is_steiner_triple_system(const ThreeGraph& graph) {
  const Vertex t = graph.vertex_count();
  if (3 * graph.edge_count() != static_cast<std::size_t>(t) * static_cast<std::size_t>(t - 1) / 2) {
    return false;
  }
  const CodegreeProfile profile(graph);
  return t < 2 || (profile.max_codegree() == 1 && profile.min_codegree() == 1);
}

namespace {

void check_order(int t) {
  if (t % 6 != 1 && t % 6 != 3) {
    throw WrongResidue("t = " + std::to_string(t) + " is not 1 or 3 mod 6");
  }
  if (t < kMinSupportedOrder || t > kMaxSupportedOrder) {
    throw UnsupportedOrder("t = " + std::to_string(t) + " outside [7, 33]");
  }
}

// t = 3n, n odd. Idempotent commutative quasigroup x o y = (x + y)(n + 1)/2.
std::vector<Triple> bose(int t) {
  const int n = t / 3;
  const auto point = [n](int x, int i) { return static_cast<Vertex>(x + n * (i % 3)); };
  std::vector<Triple> triples;
  for (int x = 0; x < n; ++x) triples.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const int z = ((x + y) * (n + 1) / 2) % n;
        triples.push_back({point(x, i), point(y, i), point(z, i + 1)});
      }
    }
  }
  return triples;
}

// t = 6n + 1. Half-idempotent commutative quasigroup on Z_2n plus a point
// at infinity.
std::vector<Triple> skolem(int t) {
  const int n = (t - 1) / 6;
  const int order = 2 * n;
  const auto point = [order](int x, int i) { return static_cast<Vertex>(x + order * (i % 3)); };
  const auto op = [n, order](int x, int y) {
    const int s = (x + y) % order;
    return s % 2 == 0 ? s / 2 : n + s / 2;
  };
  const auto infinity = static_cast<Vertex>(t - 1);
  std::vector<Triple> triples;
  for (int x = 0; x < n; ++x) triples.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) triples.push_back({infinity, point(x + n, i), point(x, i + 1)});
    for (int x = 0; x < order; ++x) {
      for (int y = x + 1; y < order; ++y) triples.push_back({point(x, i), point(y, i), point(op(x, y), i + 1)});
    }
  }
  return triples;
}

// Partitions the differences {1..(t-1)/2} (minus t/3 for t = 3 mod 6) into
// triples {x, y, z} with x + y = z or x + y + z = t. Each yields the base
// block {0, x, x + y}.
bool partition_differences(int t, std::vector<char>& used, std::vector<std::array<int, 2>>& blocks) {
  const int half = (t - 1) / 2;
  int x = 1;
  while (x <= half && used[static_cast<std::size_t>(x)]) ++x;
  if (x > half) return true;
  used[static_cast<std::size_t>(x)] = 1;
  for (int y = x + 1; y <= half; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    for (int z : {x + y, t - x - y}) {
      if (z <= y || z > half || used[static_cast<std::size_t>(z)]) continue;
      used[static_cast<std::size_t>(y)] = used[static_cast<std::size_t>(z)] = 1;
      blocks.push_back({x, y});
      if (partition_differences(t, used, blocks)) return true;
      blocks.pop_back();
      used[static_cast<std::size_t>(y)] = used[static_cast<std::size_t>(z)] = 0;
    }
  }
  used[static_cast<std::size_t>(x)] = 0;
  return false;
}

std::vector<Triple> cyclic(int t) {
  if (t == 9) throw UnsupportedOrder("no cyclic Steiner triple system of order 9");
  std::vector<char> used(static_cast<std::size_t>(t), 0);
  if (t % 6 == 3) used[static_cast<std::size_t>(t / 3)] = 1;
  std::vector<std::array<int, 2>> blocks;
  if (!partition_differences(t, used, blocks)) {
    throw UnsupportedOrder("no difference family found for t = " + std::to_string(t));
  }
  std::vector<Triple> triples;
  for (const auto& [x, y] : blocks) {
    for (int shift = 0; shift < t; ++shift) {
      triples.push_back({static_cast<Vertex>(shift), static_cast<Vertex>((shift + x) % t),
                         static_cast<Vertex>((shift + x + y) % t)});
    }
  }
  if (t % 6 == 3) {
    for (int shift = 0; shift < t / 3; ++shift) {
      triples.push_back({static_cast<Vertex>(shift), static_cast<Vertex>(shift + t / 3),
                         static_cast<Vertex>(shift + 2 * t / 3)});
    }
  }
  return triples;
}

std::vector<Vertex> random_permutation(Rng& rng, int t) {
  const std::vector<int> perm = rng.permutation(t);
  return {perm.begin(), perm.end()};
}

}  // namespace

StsMethod default_method(int t) {
  check_order(t);
  return t % 6 == 3 ? StsMethod::bose : StsMethod::skolem;
}

SteinerTripleSystem build_sts(int t, StsMethod method, std::optional<std::uint64_t> seed) {
  if (method == StsMethod::bose && t % 6 != 3) {
    throw WrongResidue("Bose construction needs t = 3 mod 6");
  }
  if (method == StsMethod::skolem && t % 6 != 1) {
    throw WrongResidue("Skolem construction needs t = 1 mod 6");
  }
  check_order(t);
  std::vector<Triple> triples;
  switch (method) {
    case StsMethod::bose: triples = bose(t); break;
    case StsMethod::skolem: triples = skolem(t); break;
    case StsMethod::cyclic: triples = cyclic(t); break;
    case StsMethod::search: triples = t % 6 == 3 ? bose(t) : skolem(t); break;
  }
  SteinerTripleSystem system{t, ThreeGraph::canonicalize(triples, static_cast<Vertex>(t)), method};
  if (seed) {
    Rng rng(derive_seed(*seed, "designs.relabel"));
    system = relabel(system, random_permutation(rng, t));
  }
  return system;
}

SteinerTripleSystem relabel(const SteinerTripleSystem& system, std::span<const Vertex> permutation) {
  const auto t = static_cast<std::size_t>(system.t);
  if (permutation.size() != t) throw NotABijection("permutation length differs from t");
  std::vector<char> seen(t, 0);
  for (Vertex v : permutation) {
    if (v < 0 || static_cast<std::size_t>(v) >= t || seen[static_cast<std::size_t>(v)]) {
      throw NotABijection("relabelling is not a permutation of [0, t)");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Triple> mapped;
  mapped.reserve(system.triples.edge_count());
  for (const Triple& e : system.triples.edges()) {
    mapped.push_back({permutation[static_cast<std::size_t>(e[0])], permutation[static_cast<std::size_t>(e[1])],
                      permutation[static_cast<std::size_t>(e[2])]});
  }
  return {system.t, ThreeGraph::canonicalize(mapped, static_cast<Vertex>(system.t)), system.construction};
}

LabelledTripleSystem labelled_union(const SteinerTripleSystem& first, const SteinerTripleSystem& second) {
  LabelledTripleSystem out;
  out.reserve(first.triples.edge_count() + second.triples.edge_count());
  for (const Triple& e : first.triples.edges()) out.push_back({0, e});
  for (const Triple& e : second.triples.edges()) out.push_back({1, e});
  return out;
}

bool edge_disjoint(const SteinerTripleSystem& first, const SteinerTripleSystem& second) {
  const auto& a = first.triples.edges();
  const auto& b = second.triples.edges();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

int cogirth_of(const SteinerTripleSystem& first, const SteinerTripleSystem& second, int cap) {
  if (cap < 3) throw DomainError("cogirth cap must be at least 3");
  if (first.t != second.t) throw DimensionMismatch("systems on different vertex counts");
  const LabelledTripleSystem system = labelled_union(first, second);
  for (int g = 3; g <= cap; ++g) {
    if (find_dense_configuration(system, g)) return g - 1;
  }
  return cap;
}

std::optional<StsPair> search_pair(int t, int target_cogirth, int max_attempts, std::uint64_t seed) {
  check_order(t);
  if (target_cogirth < 3) throw DomainError("target cogirth must be at least 3");
  if (max_attempts < 0) throw DomainError("attempt budget must be non-negative");
  const SteinerTripleSystem first = build_sts(t, default_method(t));
  std::vector<SteinerTripleSystem> sources{first};
  if (t != 9) sources.push_back(build_sts(t, StsMethod::cyclic));

  std::optional<StsPair> best;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const auto& source = sources[rng.below(sources.size())];
    SteinerTripleSystem second = relabel(source, random_permutation(rng, t));
    second.construction = StsMethod::search;
    const bool disjoint = edge_disjoint(first, second);
    const int cogirth = disjoint ? cogirth_of(first, second, target_cogirth) : 2;
    if (!best || cogirth > best->achieved_cogirth) {
      best = StsPair{first, std::move(second), cogirth, disjoint, attempt + 1};
    }
    if (best->achieved_cogirth >= target_cogirth) break;
  }
  if (best && best->achieved_cogirth < target_cogirth) best->attempts_used = max_attempts;
  return best;
}

int required_cogirth(int m) {
  const long c = subset_count(m, 3);
  return static_cast<int>(std::max<long>(2, c) + 1);
}

LocalCheck check_local_sparsity(const ThreeGraph& system, int m, const SubsetPolicy& policy) {
  if (m < 1) throw DomainError("m must be positive");
  const long n = system.vertex_count();
  const long k = std::min<long>(m, n);
  LocalCheck check;
  check.policy = resolve_policy(policy, n, k);

  // Materialise the subsets, then test them in parallel.
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(check.policy.count * k));
  for_each_subset(n, k, check.policy, [&](long, std::span<const Vertex> u) {
    flat.insert(flat.end(), u.begin(), u.end());
  });
  const auto count = static_cast<std::size_t>(check.policy.count);
  std::vector<char> sparse_ok(count, 1);
  std::vector<char> codegree_ok(count, 1);
  const SparsityMode mode = k <= kDefaultBruteVertexCap ? SparsityMode::brute : SparsityMode::exact;
  parallel_for(count, [&](std::size_t i) {
    const std::span<const Vertex> u(flat.data() + i * static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    const ThreeGraph sub = induced_subgraph(system, u);
    sparse_ok[i] = check_sparse(sub, mode).is_sparse ? 1 : 0;
    codegree_ok[i] = CodegreeProfile(sub).max_codegree() <= 2 ? 1 : 0;
  });
  for (std::size_t i = 0; i < count; ++i) {
    const auto begin = flat.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(k));
    if (!sparse_ok[i]) check.sparsity_failures.emplace_back(begin, begin + k);
    if (!codegree_ok[i]) check.codegree_failures.emplace_back(begin, begin + k);
  }
  check.subsets_checked = static_cast<long>(count);
  std::sort(check.sparsity_failures.begin(), check.sparsity_failures.end());
  check.sparsity_failures.erase(std::unique(check.sparsity_failures.begin(), check.sparsity_failures.end()),
                                check.sparsity_failures.end());
  std::sort(check.codegree_failures.begin(), check.codegree_failures.end());
  check.codegree_failures.erase(std::unique(check.codegree_failures.begin(), check.codegree_failures.end()),
                                check.codegree_failures.end());
  return check;
}

InternalSystem build_internal_system(int t, int m, int max_attempts, std::uint64_t seed,
                                     const SubsetPolicy& policy) {
  check_order(t);
  if (m < 1) throw DomainError("m must be positive");
  if (max_attempts < 1) throw DomainError("attempt budget must be positive");
  const int required = required_cogirth(m);
  const int target = std::min(required, kCogirthSearchCap);
  std::optional<StsPair> pair = search_pair(t, target, max_attempts, derive_seed(seed, "designs.search_pair"));

  InternalSystem out;
  out.pair = std::move(*pair);
  out.graph = edge_union(out.pair.first.triples, out.pair.second.triples);
  InternalSystemReport& r = out.report;
  r.t = t;
  r.m = m;
  r.edge_count = out.graph.edge_count();
  r.expected_edge_count = static_cast<std::size_t>(t) * static_cast<std::size_t>(t - 1) / 3;
  const CodegreeProfile profile(out.graph);
  r.max_codegree = profile.max_codegree();
  r.min_codegree = profile.min_codegree();
  r.edge_disjoint = out.pair.edge_disjoint;
  r.achieved_cogirth = out.pair.achieved_cogirth;
  r.required_cogirth = required;
  r.search_target = target;
  r.cogirth_sufficient = r.achieved_cogirth >= required;
  r.exceeds_quarter_square = 4 * r.edge_count > static_cast<std::size_t>(t) * static_cast<std::size_t>(t);
  r.direct = check_local_sparsity(out.graph, m, policy);
  r.direct_check_passed = r.direct.sparsity_failures.empty() && r.direct.codegree_failures.empty();
  return out;
}

}  // namespace hyperjump
