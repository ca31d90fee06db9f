#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperjump/rational.hpp"

namespace hyperjump {

inline constexpr std::uint64_t kDefaultMaxDenominator = 1'000'000;

/// A point of the probability simplex held exactly, with a double mirror.
/// Exact entries are nonnegative and sum to exactly 1.
class WeightVector {
 public:
  /// Throws DomainError unless every entry is >= 0 and the sum is exactly 1.
  static WeightVector from_exact(std::vector<Rational> weights);

  /// Rounds each coordinate to a continued-fraction convergent with
  /// denominator <= max_denominator (negatives clamp to 0), then rescales
  /// exactly onto the simplex.
  static WeightVector from_floats(std::span<const double> weights,
                                  std::uint64_t max_denominator = kDefaultMaxDenominator);

  static WeightVector uniform(std::size_t dimension);
  static WeightVector indicator(std::size_t dimension, std::size_t index);

  std::size_t dimension() const noexcept { return exact_.size(); }
  const std::vector<Rational>& exact() const noexcept { return exact_; }
  const std::vector<double>& approx() const noexcept { return approx_; }
  const Rational& operator[](std::size_t i) const { return exact_[i]; }

  /// True when every coordinate is strictly positive.
  bool full_support() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.exact_ == b.exact_; }

 private:
  explicit WeightVector(std::vector<Rational> weights);

  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

}  // namespace hyperjump
