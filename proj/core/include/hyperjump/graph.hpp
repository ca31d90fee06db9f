#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperjump {

using Vertex = std::int32_t;
using Triple = std::array<Vertex, 3>;

/// A 3-uniform hypergraph on vertices [0, vertex_count) in canonical form:
/// every triple sorted ascending, the edge list strictly increasing in
/// lexicographic order. Immutable once built.
class ThreeGraph {
 public:
  ThreeGraph() = default;

  /// Sorts each triple and the edge list. Throws RepeatedVertexInTriple,
  /// IndexOutOfRange or DuplicateEdge on malformed input.
  static ThreeGraph canonicalize(std::span<const Triple> raw_edges, Vertex vertex_count);

  /// Edgeless graph.
  static ThreeGraph empty(Vertex vertex_count);

  /// All C(n, 3) triples.
  static ThreeGraph complete(Vertex vertex_count);

  Vertex vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Triple>& edges() const noexcept { return edges_; }

  bool contains(const Triple& sorted_triple) const;

  friend bool operator==(const ThreeGraph&, const ThreeGraph&) = default;

 private:
  ThreeGraph(Vertex vertex_count, std::vector<Triple> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  Vertex vertex_count_ = 0;
  std::vector<Triple> edges_;
};

/// Sub-hypergraph induced on `subset`, reindexed by the order-preserving map
/// subset -> [0, |subset|). The subset may be given in any order but must
/// not repeat vertices.
ThreeGraph induced_subgraph(const ThreeGraph& graph, std::span<const Vertex> subset);

/// Union of edge sets on a common vertex count (duplicates merged).
ThreeGraph edge_union(const ThreeGraph& a, const ThreeGraph& b);

/// Pair codegrees m_uv = |{w : uvw in H}| stored densely over u < v.
class CodegreeProfile {
 public:
  explicit CodegreeProfile(const ThreeGraph& graph);

  int codegree(Vertex u, Vertex v) const;
  int max_codegree() const noexcept { return max_; }
  /// Smallest codegree over all pairs (0 for fewer than two vertices).
  int min_codegree() const noexcept { return min_; }
  /// Sum over pairs; always 3 * |edges|.
  std::int64_t total() const noexcept { return total_; }
  Vertex vertex_count() const noexcept { return n_; }

 private:
  std::size_t index(Vertex u, Vertex v) const;

  Vertex n_ = 0;
  std::vector<int> counts_;
  int max_ = 0;
  int min_ = 0;
  std::int64_t total_ = 0;
};

inline CodegreeProfile codegree_profile(const ThreeGraph& graph) { return CodegreeProfile(graph); }

}  // namespace hyperjump
