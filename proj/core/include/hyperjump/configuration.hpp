#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperjump/graph.hpp"

namespace hyperjump {

/// A triple tagged with the system it came from. The labelled union of two
/// triple systems keeps both copies of a shared triple.
struct LabelledTriple {
  int system = 0;
  Triple triple{};

  friend bool operator==(const LabelledTriple&, const LabelledTriple&) = default;
};

using LabelledTripleSystem = std::vector<LabelledTriple>;

/// i labelled triples (2 <= i) spanning at most i + 1 vertices.
struct DenseConfiguration {
  std::vector<std::size_t> members;  // indices into the searched system
  std::vector<Vertex> vertices;      // spanned vertex set, ascending
};

/// Searches for i labelled triples, 2 <= i < g, spanning at most i + 1
/// vertices. Only connected triple sets are grown: a smallest violating
/// configuration is always connected, so absence is decided exactly.
std::optional<DenseConfiguration> find_dense_configuration(const LabelledTripleSystem& system,
                                                           int g);

}  // namespace hyperjump
