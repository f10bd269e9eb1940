#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parry {

using Digit = unsigned;

/// Outcome of the Parry admissibility test.
struct ParryCheck {
  bool admissible = false;
  /// 1-based index j of the first shift t_j t_{j+1}... that is not strictly
  /// smaller than t_1 t_2...; empty when admissible.
  std::optional<std::size_t> violating_shift;

  explicit operator bool() const noexcept { return admissible; }
};

/// An eventually periodic digit sequence t_1 ... t_m (t_{m+1} ... t_{m+p})^omega,
/// the candidate form of a Renyi expansion of unity d_beta(1).
///
/// The representation is kept exactly as given: a non-minimal split such as
/// "2 1 (1)" is a different object from "2 (1)" and yields a different
/// canonical substitution. Use `minimized()` for the shortest split.
class RenyiExpansion {
 public:
  /// Throws InvalidInput if the period is empty.
  RenyiExpansion(std::vector<Digit> preperiod, std::vector<Digit> period);

  /// Parses the text form "t1 t2 ... tm (tm+1 ... tm+p)".
  static RenyiExpansion parse(std::string_view text);
  /// Parses {"preperiod": [...], "period": [...]}.
  static RenyiExpansion from_json(std::string_view json);

  const std::vector<Digit>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Digit>& period() const noexcept { return period_; }
  std::size_t preperiod_length() const noexcept { return preperiod_.size(); }
  std::size_t period_length() const noexcept { return period_.size(); }

  /// t_i for i >= 1.
  Digit digit(std::size_t i) const;

  /// The period is the single digit 0, i.e. d_beta(1) is finite.
  bool is_simple() const noexcept;
  bool is_minimal() const;
  RenyiExpansion minimized() const;

  std::string to_string() const;
  std::string to_json() const;

  friend bool operator==(const RenyiExpansion&, const RenyiExpansion&) = default;

 private:
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

/// Parry's criterion: every proper shift is strictly lexicographically
/// smaller than the whole sequence. Compared over a window of
/// m + 2p digits, which decides the question for eventually periodic input.
ParryCheck parry_check(const RenyiExpansion& expansion);

/// Throws InvalidInput for an empty sequence or an empty period.
ParryCheck parry_check(std::span<const Digit> preperiod, std::span<const Digit> period);

}  // namespace parry
