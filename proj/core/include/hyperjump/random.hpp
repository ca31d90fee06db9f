#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hyperjump {

/// Seed for a named stream derived from a root seed, e.g.
/// derive_seed(root, "designs.search_pair"). Every random consumer draws
/// from its own stream so that adding randomness in one module does not
/// perturb another.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream);

/// Seed for the index-th independent task of a stream.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) built from the top 53 bits of the engine output.
  double uniform();

  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// A point drawn from the flat Dirichlet(1, ..., 1) distribution.
  std::vector<double> dirichlet(std::size_t dimension);

  std::vector<int> permutation(int size);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperjump
