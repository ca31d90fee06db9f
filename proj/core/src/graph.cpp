#include "hyperjump/graph.hpp"

#include <algorithm>
#include <string>

#include "hyperjump/error.hpp"

namespace hyperjump {
namespace {

std::string describe(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

ThreeGraph ThreeGraph::canonicalize(std::span<const Triple> raw_edges, Vertex vertex_count) {
  if (vertex_count < 0) throw IndexOutOfRange("negative vertex count");
  std::vector<Triple> edges(raw_edges.begin(), raw_edges.end());
  for (auto& e : edges) {
    for (const Vertex v : e) {
      if (v < 0 || v >= vertex_count) {
        throw IndexOutOfRange("triple " + describe(e) + " leaves [0, " +
                              std::to_string(vertex_count) + ")");
      }
    }
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) {
      throw RepeatedVertexInTriple("triple " + describe(e) + " repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw DuplicateEdge("triple " + describe(*dup) + " appears twice");
  }
  return ThreeGraph(vertex_count, std::move(edges));
}

ThreeGraph ThreeGraph::empty(Vertex vertex_count) {
  if (vertex_count < 0) throw IndexOutOfRange("negative vertex count");
  return ThreeGraph(vertex_count, {});
}

ThreeGraph ThreeGraph::complete(Vertex vertex_count) {
  if (vertex_count < 0) throw IndexOutOfRange("negative vertex count");
  std::vector<Triple> edges;
  for (Vertex a = 0; a < vertex_count; ++a)
    for (Vertex b = a + 1; b < vertex_count; ++b)
      for (Vertex c = b + 1; c < vertex_count; ++c) edges.push_back({a, b, c});
  return ThreeGraph(vertex_count, std::move(edges));
}

bool ThreeGraph::contains(const Triple& sorted_triple) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_triple);
}

ThreeGraph induced_subgraph(const ThreeGraph& graph, std::span<const Vertex> subset) {
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw IndexOutOfRange("subset repeats a vertex");
  }
  std::vector<Vertex> position(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Vertex v = sorted[i];
    if (v < 0 || v >= graph.vertex_count()) {
      throw IndexOutOfRange("vertex " + std::to_string(v) + " not in graph");
    }
    position[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Triple> edges;
  for (const auto& e : graph.edges()) {
    const Vertex a = position[static_cast<std::size_t>(e[0])];
    const Vertex b = position[static_cast<std::size_t>(e[1])];
    const Vertex c = position[static_cast<std::size_t>(e[2])];
    if (a >= 0 && b >= 0 && c >= 0) edges.push_back({a, b, c});
  }
  // The map is order preserving, so the result is already canonical.
  return ThreeGraph::canonicalize(edges, static_cast<Vertex>(sorted.size()));
}

ThreeGraph edge_union(const ThreeGraph& a, const ThreeGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw DimensionMismatch("edge_union needs equal vertex counts");
  }
  std::vector<Triple> edges;
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(edges));
  return ThreeGraph::canonicalize(edges, a.vertex_count());
}

CodegreeProfile::CodegreeProfile(const ThreeGraph& graph) : n_(graph.vertex_count()) {
  const auto n = static_cast<std::size_t>(n_);
  counts_.assign(n * (n > 0 ? n - 1 : 0) / 2, 0);
  for (const auto& e : graph.edges()) {
    ++counts_[index(e[0], e[1])];
    ++counts_[index(e[0], e[2])];
    ++counts_[index(e[1], e[2])];
  }
  total_ = 3 * static_cast<std::int64_t>(graph.edge_count());
  if (!counts_.empty()) {
    max_ = *std::max_element(counts_.begin(), counts_.end());
    min_ = *std::min_element(counts_.begin(), counts_.end());
  }
}

std::size_t CodegreeProfile::index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  // Row-major offset into the strict upper triangle.
  const auto n = static_cast<std::size_t>(n_);
  const auto uu = static_cast<std::size_t>(u);
  return uu * (2 * n - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

int CodegreeProfile::codegree(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw IndexOutOfRange("codegree needs two distinct vertices in range");
  }
  return counts_[index(u, v)];
}

}  // namespace hyperjump
