#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parry {

using Letter = std::uint8_t;

/// A finite word over a small integer alphabet {0, 1, ..., k-1}.
///
/// Letter counts are cached and kept in sync by every mutating member, so
/// abelianization queries are O(1).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  /// Parses "0001" (one digit per letter) or "0,12,3" (comma separated).
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  operator std::span<const Letter>() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::size_t count(Letter x) const noexcept {
    return x < counts_.size() ? counts_[x] : 0;
  }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  Word& push_back(Letter x);
  Word& append(std::span<const Letter> other);

  Word reversed() const;
  bool is_palindrome() const noexcept;
  Word substr(std::size_t pos, std::size_t len) const;
  bool starts_with(std::span<const Letter> prefix) const noexcept;
  bool ends_with(std::span<const Letter> suffix) const noexcept;

  /// Digits for alphabets of size <= 10, comma separated indices otherwise.
  /// `alphabet_size == 0` infers the size from the largest letter present.
  std::string to_string(std::size_t alphabet_size = 0) const;

  friend bool operator==(const Word& x, const Word& y) noexcept {
    return x.letters_ == y.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
    return x.letters_ <=> y.letters_;
  }

 private:
  void recount();

  std::vector<Letter> letters_;
  std::vector<std::size_t> counts_;
};

Word operator+(Word lhs, std::span<const Letter> rhs);
Word operator+(Word lhs, const Word& rhs);

/// x^count
Word power(Letter x, std::size_t count);

bool is_palindrome(std::span<const Letter> w) noexcept;

/// Renders a letter sequence with the same convention as Word::to_string.
std::string render(std::span<const Letter> w, std::size_t alphabet_size = 0);

/// True iff `inner` sits exactly in the middle of `outer`, i.e.
/// outer = x inner y with |x| = |y|.
bool is_central_factor(std::span<const Letter> inner,
                       std::span<const Letter> outer) noexcept;

}  // namespace parry
