#pragma once

#include <optional>
#include <vector>

#include "hyperjump/graph.hpp"

namespace hyperjump {

enum class SparsityMode { exact, brute };

inline constexpr int kDefaultBruteVertexCap = 12;

/// Outcome of testing |Q[S]| <= |S| - 2 for vertex sets S with |S| >= 2.
struct SparsityVerdict {
  bool is_sparse = true;
  /// A set S with |Q[S]| >= |S| - 1, present whenever is_sparse is false.
  std::optional<std::vector<Vertex>> violating_set;
  /// max over checked S of |Q[S]| - |S| + 2; the graph is sparse iff this is <= 0.
  /// Zero for graphs with fewer than two vertices.
  int excess = 0;
};

/// Exact mode decides the condition for every S through a maximum-weight
/// closure computation (one min cut per edge forced into S). Brute mode
/// enumerates all S with 2 <= |S| <= min(n, size_cap) and refuses graphs
/// with more than brute_vertex_cap vertices (CapExceeded).
SparsityVerdict check_sparse(const ThreeGraph& graph, SparsityMode mode = SparsityMode::exact,
                             std::optional<int> size_cap = std::nullopt,
                             int brute_vertex_cap = kDefaultBruteVertexCap);

}  // namespace hyperjump
