#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parry/quadratic.hpp"
#include "parry/renyi.hpp"
#include "parry/word.hpp"

namespace parry {

/// Working precision in decimal digits when none is requested.
inline constexpr unsigned kDefaultPrecision = 64;

/// Binary precision (with guard bits) backing `digits10` decimal digits.
unsigned long precision_bits(unsigned digits10);

/// 10^-exponent at the given binary precision.
mpf_class pow10_neg(unsigned exponent, unsigned long bits);

/// (u + v sqrt(d)) / w with integer coefficients.
struct QuadraticSurd {
  long long u = 0;
  long long v = 0;
  long long d = 0;
  long long w = 1;
};

/// A base beta > 1 held at a fixed decimal working precision. For quadratic
/// parameters the exact algebraic form is kept alongside.
class BetaValue {
 public:
  BetaValue(mpf_class value, unsigned precision, std::optional<QuadraticSurd> exact = {});

  const mpf_class& value() const noexcept { return value_; }
  unsigned precision() const noexcept { return precision_; }
  unsigned long bits() const noexcept { return bits_; }
  const std::optional<QuadraticSurd>& exact() const noexcept { return exact_; }

  /// 10^(-precision/2): the agreement expected of derived identities.
  mpf_class tolerance() const;

  /// A number at this value's precision.
  mpf_class make(double x) const { return mpf_class(x, bits_); }

  std::string to_string(unsigned digits = 0) const;

 private:
  mpf_class value_;
  unsigned precision_;
  unsigned long bits_;
  std::optional<QuadraticSurd> exact_;
};

/// Larger root of x^2 - (a+1) x + (a - b).
BetaValue beta_of(const QuadraticParams& params, unsigned precision = kDefaultPrecision);

/// The beta > 1 with sum t_i beta^-i = 1, found by bisection on
/// [t_1, t_1 + 1). Throws InvalidInput if the expansion fails Parry's test.
BetaValue beta_of(const RenyiExpansion& expansion, unsigned precision = kDefaultPrecision);

/// d_beta(1) = a (b)^omega.
RenyiExpansion renyi_of_quadratic(const QuadraticParams& params);

/// sum_{i>=1} t_i beta^-i by direct summation of the series, truncated once
/// terms fall below the working precision. Independent of the closed-form
/// tail sums used by `gap_distances`.
mpf_class renyi_series_sum(const RenyiExpansion& expansion, const BetaValue& beta);

/// Greedy beta-expansion x = sum_{i <= k} x_i beta^i, truncated.
struct BetaExpansion {
  /// k, the exponent of the leading digit (beta^k <= x < beta^(k+1)).
  int top_exponent = 0;
  /// x_k, x_{k-1}, ..., most significant first.
  std::vector<Digit> digits;

  mpf_class reconstruct(const BetaValue& beta) const;
  /// Digits of nonnegative exponent, most significant first ("0" if none).
  std::vector<Digit> integer_digits() const;
  /// "x_k ... x_0 . x_-1 ..." with digits separated when any exceeds 9.
  std::string to_string() const;
};

/// Throws InvalidInput for x < 0 or digit_count == 0.
BetaExpansion beta_expand(const mpf_class& x, const BetaValue& beta, std::size_t digit_count);

/// Delta_k = sum_{i>=1} t_{i+k} beta^-i for k = 0 .. m+p-1.
class GapDistances {
 public:
  explicit GapDistances(std::vector<mpf_class> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const mpf_class& operator[](std::size_t k) const { return values_[k]; }
  const std::vector<mpf_class>& values() const noexcept { return values_; }

  /// Index of the nearest Delta_k if it lies within `tolerance` of `gap`
  /// (lowest index on ties).
  std::optional<std::size_t> classify(const mpf_class& gap, const mpf_class& tolerance) const;

 private:
  std::vector<mpf_class> values_;
};

/// Closed-form geometric summation of the periodic tail.
GapDistances gap_distances(const RenyiExpansion& expansion, const BetaValue& beta);

struct BetaIntegers {
  /// Increasing nonnegative beta-integers, starting at 0.
  std::vector<mpf_class> values;
  /// Admissible digit strings of the values, most significant first.
  std::vector<std::vector<Digit>> expansions;
  /// Letter k for each gap equal to Delta_k; values.size() - 1 letters.
  Word gaps;
};

/// The first `count` nonnegative beta-integers from admissible digit strings,
/// with gaps coded by the nearest Delta_k. When `beta` carries an exact
/// quadratic form and `expansion` is a b^omega, gaps are also classified
/// exactly in Z[beta] and the two classifications must agree.
///
/// Throws InvalidInput for count < 2 or an inadmissible expansion,
/// UnsupportedVariant for simple expansions, PrecisionError when a gap
/// matches no Delta_k within `tolerance`.
BetaIntegers beta_integers(const RenyiExpansion& expansion, const BetaValue& beta,
                           std::size_t count, double tolerance = 1e-9);

}  // namespace parry
