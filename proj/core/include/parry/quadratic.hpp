#pragma once

#include <string>

namespace parry {

/// Parameters of d_beta(1) = a b^omega, with a - 1 >= b >= 1.
/// beta is the larger root of x^2 - (a+1) x + (a - b).
class QuadraticParams {
 public:
  /// Throws InvalidParams unless a - 1 >= b >= 1.
  QuadraticParams(unsigned a, unsigned b);

  unsigned a() const noexcept { return a_; }
  unsigned b() const noexcept { return b_; }

  /// b = a - 1: the fixed point is Sturmian and the U/V tower degenerates.
  bool sturmian() const noexcept { return b_ + 1 == a_; }

  std::string to_string() const;

  friend bool operator==(const QuadraticParams&, const QuadraticParams&) = default;

 private:
  unsigned a_;
  unsigned b_;
};

}  // namespace parry
