#include "hyperjump/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

#include "hyperjump/error.hpp"

namespace hyperjump {
namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<boost::vertex_index_t, long,
    boost::property<boost::vertex_color_t, boost::default_color_type,
    boost::property<boost::vertex_distance_t, long,
    boost::property<boost::vertex_predecessor_t, Traits::edge_descriptor>>>>,
    boost::property<boost::edge_capacity_t, long,
    boost::property<boost::edge_residual_capacity_t, long,
    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using FlowEdge = Traits::edge_descriptor;

// Closure network: source -> edge node (gain 1), edge node -> each of its
// three vertex nodes (infinite), vertex node -> sink (cost 1). A closed set
// S of vertex nodes together with the edge nodes it fully contains has
// value |Q[S]| - |S| = |E| - (cut capacity). Source -> vertex arcs start at
// zero capacity and are raised to "infinite" to force a vertex into S.
class ClosureNetwork {
 public:
  explicit ClosureNetwork(const ThreeGraph& graph)
      : n_(graph.vertex_count()),
        m_(static_cast<long>(graph.edge_count())),
        infinite_(m_ + n_ + 1),
        net_(static_cast<std::size_t>(2 + m_ + n_)) {
    source_ = 0;
    sink_ = 1;
    for (long e = 0; e < m_; ++e) {
      const auto& t = graph.edges()[static_cast<std::size_t>(e)];
      add_arc(source_, edge_node(e), 1);
      for (const Vertex v : t) add_arc(edge_node(e), vertex_node(v), infinite_);
    }
    force_arcs_.reserve(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      add_arc(vertex_node(v), sink_, 1);
      force_arcs_.push_back(add_arc(source_, vertex_node(v), 0));
    }
  }

  /// max over S containing `forced` of |Q[S]| - |S|, and one maximizer.
  std::pair<long, std::vector<Vertex>> best_closure(const Triple& forced) {
    auto capacity = get(boost::edge_capacity, net_);
    for (const Vertex v : forced) capacity[force_arcs_[static_cast<std::size_t>(v)]] = infinite_;
    const long flow = boykov_kolmogorov_max_flow(net_, source_, sink_);
    for (const Vertex v : forced) capacity[force_arcs_[static_cast<std::size_t>(v)]] = 0;

    // Source side of the minimum cut: residual reachability from the source.
    auto residual = get(boost::edge_residual_capacity, net_);
    std::vector<char> seen(num_vertices(net_), 0);
    std::deque<std::size_t> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto [it, end] = out_edges(u, net_); it != end; ++it) {
        const auto w = target(*it, net_);
        if (!seen[w] && residual[*it] > 0) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<Vertex> closure;
    for (Vertex v = 0; v < n_; ++v) {
      if (seen[vertex_node(v)]) closure.push_back(v);
    }
    return {m_ - flow, std::move(closure)};
  }

 private:
  std::size_t edge_node(long e) const { return static_cast<std::size_t>(2 + e); }
  std::size_t vertex_node(Vertex v) const { return static_cast<std::size_t>(2 + m_ + v); }

  FlowEdge add_arc(std::size_t from, std::size_t to, long cap) {
    auto capacity = get(boost::edge_capacity, net_);
    auto reverse = get(boost::edge_reverse, net_);
    const FlowEdge forward = add_edge(from, to, net_).first;
    const FlowEdge backward = add_edge(to, from, net_).first;
    capacity[forward] = cap;
    capacity[backward] = 0;
    reverse[forward] = backward;
    reverse[backward] = forward;
    return forward;
  }

  Vertex n_;
  long m_;
  long infinite_;
  FlowGraph net_;
  std::size_t source_ = 0;
  std::size_t sink_ = 1;
  std::vector<FlowEdge> force_arcs_;
};

SparsityVerdict check_exact(const ThreeGraph& graph) {
  SparsityVerdict verdict;
  if (graph.vertex_count() < 2) return verdict;
  // Any pair gives |Q[S]| - |S| + 2 = 0. A set with positive excess spans an
  // edge, so forcing each edge in turn covers every candidate.
  verdict.excess = 0;
  if (graph.edge_count() == 0) return verdict;
  ClosureNetwork network(graph);
  std::vector<Vertex> best_set;
  for (const auto& e : graph.edges()) {
    auto [value, closure] = network.best_closure(e);
    const int excess = static_cast<int>(value) + 2;
    if (excess > verdict.excess) {
      verdict.excess = excess;
      best_set = std::move(closure);
    }
  }
  if (verdict.excess > 0) {
    verdict.is_sparse = false;
    verdict.violating_set = std::move(best_set);
  }
  return verdict;
}

SparsityVerdict check_brute(const ThreeGraph& graph, std::optional<int> size_cap, int vertex_cap) {
  const Vertex n = graph.vertex_count();
  if (n > vertex_cap || n > 62) {
    throw CapExceeded("brute sparsity on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(vertex_cap));
  }
  SparsityVerdict verdict;
  if (n < 2) return verdict;
  const int cap = std::min<int>(n, size_cap.value_or(n));
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    edge_masks.push_back((1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]));
  }
  int best = std::numeric_limits<int>::min();
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size > cap) continue;
    int inside = 0;
    for (const auto em : edge_masks) inside += (mask & em) == em;
    const int excess = inside - size + 2;
    if (excess > best || (excess == best && size < std::popcount(best_mask))) {
      best = excess;
      best_mask = mask;
    }
  }
  if (best == std::numeric_limits<int>::min()) return verdict;
  verdict.excess = best;
  if (best > 0) {
    verdict.is_sparse = false;
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if (best_mask >> v & 1ULL) set.push_back(v);
    }
    verdict.violating_set = std::move(set);
  }
  return verdict;
}

}  // namespace

SparsityVerdict check_sparse(const ThreeGraph& graph, SparsityMode mode,
                             std::optional<int> size_cap, int brute_vertex_cap) {
  if (mode == SparsityMode::exact) return check_exact(graph);
  return check_brute(graph, size_cap, brute_vertex_cap);
}

}  // namespace hyperjump
