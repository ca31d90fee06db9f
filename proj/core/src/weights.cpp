#include "hyperjump/weights.hpp"

#include <algorithm>

#include "hyperjump/error.hpp"

namespace hyperjump {

WeightVector::WeightVector(std::vector<Rational> weights) : exact_(std::move(weights)) {
  approx_.reserve(exact_.size());
  for (const auto& w : exact_) approx_.push_back(w.get_d());
}

WeightVector WeightVector::from_exact(std::vector<Rational> weights) {
  if (weights.empty()) throw DomainError("weight vector must have at least one coordinate");
  Rational total = 0;
  for (auto& w : weights) {
    w.canonicalize();
    if (sgn(w) < 0) throw DomainError("negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw DomainError("weights sum to " + to_string(total) + ", not 1");
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::from_floats(std::span<const double> weights,
                                       std::uint64_t max_denominator) {
  std::vector<Rational> exact;
  exact.reserve(weights.size());
  Rational total = 0;
  for (const double w : weights) {
    exact.push_back(w > 0.0 ? nearest_convergent(w, max_denominator) : Rational(0));
    total += exact.back();
  }
  if (sgn(total) <= 0) throw DomainError("weights have no positive mass");
  for (auto& w : exact) w /= total;
  return WeightVector(std::move(exact));
}

WeightVector WeightVector::uniform(std::size_t dimension) {
  if (dimension == 0) throw DomainError("weight vector must have at least one coordinate");
  return WeightVector(std::vector<Rational>(dimension, Rational(1, dimension)));
}

WeightVector WeightVector::indicator(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw IndexOutOfRange("indicator index outside dimension");
  std::vector<Rational> w(dimension, Rational(0));
  w[index] = 1;
  return WeightVector(std::move(w));
}

bool WeightVector::full_support() const {
  return std::all_of(exact_.begin(), exact_.end(), [](const Rational& w) { return sgn(w) > 0; });
}

}  // namespace hyperjump
