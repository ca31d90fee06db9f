#include "hyperjump/configuration.hpp"

#include <algorithm>

#include "hyperjump/error.hpp"

namespace hyperjump {
namespace {

// Enumerates connected triple sets with the ESU scheme (each set visited
// once, rooted at its smallest index) and stops at the first configuration.
class ConfigurationSearch {
 public:
  ConfigurationSearch(const LabelledTripleSystem& system, int g) : system_(system), g_(g) {
    Vertex max_vertex = -1;
    for (const auto& lt : system_) {
      for (const Vertex v : lt.triple) {
        if (v < 0) throw IndexOutOfRange("negative vertex in labelled triple");
        max_vertex = std::max(max_vertex, v);
      }
    }
    vertex_use_.assign(static_cast<std::size_t>(max_vertex + 1), 0);
    std::vector<std::vector<std::size_t>> incidence(vertex_use_.size());
    for (std::size_t i = 0; i < system_.size(); ++i) {
      for (const Vertex v : system_[i].triple) incidence[static_cast<std::size_t>(v)].push_back(i);
    }
    neighbours_.resize(system_.size());
    for (std::size_t i = 0; i < system_.size(); ++i) {
      auto& nb = neighbours_[i];
      for (const Vertex v : system_[i].triple) {
        const auto& inc = incidence[static_cast<std::size_t>(v)];
        nb.insert(nb.end(), inc.begin(), inc.end());
      }
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      nb.erase(std::remove(nb.begin(), nb.end(), i), nb.end());
    }
    closed_.assign(system_.size(), 0);
  }

  std::optional<DenseConfiguration> run() {
    for (std::size_t root = 0; root < system_.size(); ++root) {
      root_ = root;
      std::vector<std::size_t> extension;
      for (const auto w : neighbours_[root]) {
        if (w > root) extension.push_back(w);
      }
      push(root);
      const bool found = extend(extension);
      if (found) return build_result();
      pop(root);
    }
    return std::nullopt;
  }

 private:
  void push(std::size_t t) {
    members_.push_back(t);
    for (const Vertex v : system_[t].triple) {
      if (vertex_use_[static_cast<std::size_t>(v)]++ == 0) ++spanned_;
    }
    ++closed_[t];
    for (const auto w : neighbours_[t]) ++closed_[w];
  }

  void pop(std::size_t t) {
    members_.pop_back();
    for (const Vertex v : system_[t].triple) {
      if (--vertex_use_[static_cast<std::size_t>(v)] == 0) --spanned_;
    }
    --closed_[t];
    for (const auto w : neighbours_[t]) --closed_[w];
  }

  // `closed_[w] > 0` means w is in the current set or adjacent to it.
  bool extend(std::vector<std::size_t> extension) {
    const int size = static_cast<int>(members_.size());
    if (size >= 2 && spanned_ <= size + 1) return true;
    // Each further triple lowers (spanned - size) by at most one, and the
    // set may grow to g - 1 triples, so more than g spanned vertices is hopeless.
    if (size >= g_ - 1 || spanned_ > g_) return false;
    while (!extension.empty()) {
      const auto w = extension.back();
      extension.pop_back();
      std::vector<std::size_t> next = extension;
      for (const auto u : neighbours_[w]) {
        if (u > root_ && closed_[u] == 0) next.push_back(u);
      }
      push(w);
      if (extend(std::move(next))) return true;
      pop(w);
    }
    return false;
  }

  DenseConfiguration build_result() const {
    DenseConfiguration config;
    config.members = members_;
    std::sort(config.members.begin(), config.members.end());
    for (const auto m : config.members) {
      for (const Vertex v : system_[m].triple) config.vertices.push_back(v);
    }
    std::sort(config.vertices.begin(), config.vertices.end());
    config.vertices.erase(std::unique(config.vertices.begin(), config.vertices.end()),
                          config.vertices.end());
    return config;
  }

  const LabelledTripleSystem& system_;
  int g_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<int> vertex_use_;
  std::vector<int> closed_;
  std::vector<std::size_t> members_;
  int spanned_ = 0;
  std::size_t root_ = 0;
};

}  // namespace

std::optional<DenseConfiguration> find_dense_configuration(const LabelledTripleSystem& system,
                                                           int g) {
  if (g < 2) throw DomainError("configuration search needs g >= 2");
  if (g == 2) return std::nullopt;  // no i with 2 <= i < 2
  return ConfigurationSearch(system, g).run();
}

}  // namespace hyperjump
