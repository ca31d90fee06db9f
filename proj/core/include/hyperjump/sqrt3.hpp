#pragma once

#include <cmath>

#include "hyperjump/rational.hpp"

namespace hyperjump {

/// Exact element a + b*sqrt(3) of Q(sqrt 3).
class Sqrt3Number {
 public:
  Sqrt3Number() = default;
  Sqrt3Number(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt3_part() const noexcept { return b_; }

  double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

  /// Sign decided exactly by comparing a^2 with 3 b^2 when the parts disagree.
  int sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    const int cmp_sq = cmp(Rational(a_ * a_), Rational(3 * b_ * b_));
    return cmp_sq > 0 ? sa : (cmp_sq < 0 ? sb : 0);
  }

  friend Sqrt3Number operator+(const Sqrt3Number& x, const Sqrt3Number& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Sqrt3Number operator-(const Sqrt3Number& x, const Sqrt3Number& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend Sqrt3Number operator*(const Sqrt3Number& x, const Sqrt3Number& y) {
    return {x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Sqrt3Number operator/(const Sqrt3Number& x, const Sqrt3Number& y) {
    // Multiply through by the conjugate a - b sqrt 3.
    const Rational norm = y.a_ * y.a_ - 3 * y.b_ * y.b_;
    const Sqrt3Number num = x * Sqrt3Number(y.a_, -y.b_);
    return {num.a_ / norm, num.b_ / norm};
  }
  friend bool operator==(const Sqrt3Number& x, const Sqrt3Number& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace hyperjump
