#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parry/quadratic.hpp"
#include "parry/renyi.hpp"
#include "parry/word.hpp"

namespace parry {

/// A morphism on {0, ..., k-1}* given by the images of the letters, with an
/// axiom z such that phi(z) = z w for nonempty w. The fixed point is
/// lim phi^n(z).
class Substitution {
 public:
  /// Throws InvalidInput when an image is empty, uses a letter outside the
  /// alphabet, or phi(axiom) does not start with the axiom and have length >= 2.
  Substitution(std::vector<Word> images, Letter axiom = 0);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  Letter axiom() const noexcept { return axiom_; }
  const Word& image(Letter x) const { return images_.at(x); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t max_image_length() const noexcept;

  Word apply(std::span<const Letter> w) const;
  void apply_into(std::span<const Letter> w, std::vector<Letter>& out) const;

  /// M[i][j] = number of letters i in phi(j), so counts(phi(w)) = M counts(w).
  std::vector<std::vector<std::size_t>> incidence_matrix() const;

  /// (a,b) when this is phi(0) = 0^a 1, phi(1) = 0^b 1 with axiom 0.
  std::optional<QuadraticParams> quadratic_params() const;

  /// {"alphabet": k, "images": ["0001", "01"], "axiom": 0}
  std::string to_json() const;
  static Substitution from_json(std::string_view json);

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> images_;
  Letter axiom_;
};

/// phi(0) = 0^a 1, phi(1) = 0^b 1, axiom 0. The Sturmian boundary b = a-1 is
/// accepted; callers check params.sturmian().
Substitution quadratic_substitution(const QuadraticParams& params);

/// The canonical substitution of a non-simple Parry expansion
/// t_1..t_m (t_{m+1}..t_{m+p})^omega over {0, ..., m+p-1}:
///   phi(j) = 0^{t_{j+1}} (j+1)   for j < m+p-1,
///   phi(m+p-1) = 0^{t_{m+p}} m.
/// Built from the representation as given (see RenyiExpansion).
///
/// Throws InvalidInput if the digits fail Parry's test, UnsupportedVariant
/// for simple expansions or an empty preperiod.
Substitution parry_substitution(const RenyiExpansion& expansion);

/// Some power of the incidence matrix is entrywise positive. Powers up to
/// k^2 are tried, which exceeds Wielandt's bound (k-1)^2 + 1.
bool is_primitive(const Substitution& sub);

/// Incrementally materialized prefix of the fixed point. The buffer only
/// grows, and every prefix handed out stays valid as a prefix of later ones.
class FixedPointStream {
 public:
  explicit FixedPointStream(Substitution sub);

  const Substitution& substitution() const noexcept { return sub_; }

  /// First `length` letters; extends the buffer when needed.
  std::span<const Letter> prefix(std::size_t length);
  std::size_t materialized() const noexcept { return buffer_.size(); }

 private:
  Substitution sub_;
  std::vector<Letter> buffer_;
  std::size_t cursor_ = 1;  // next buffer position whose image is appended
};

/// First `length` letters of the fixed point of `sub`. Never holds more than
/// length + max_image_length letters.
Word fixed_point_prefix(const Substitution& sub, std::size_t length);
std::vector<Letter> fixed_point_letters(const Substitution& sub, std::size_t length);

}  // namespace parry
