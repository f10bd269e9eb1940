#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "parry/substitution.hpp"
#include "parry/word.hpp"

namespace parry {

/// Suffix array with LCP over a finite text. Answers, for every n at once,
/// which distinct length-n factors the text has, plus membership queries.
class FactorIndex {
 public:
  explicit FactorIndex(std::vector<Letter> text);

  std::span<const Letter> text() const noexcept { return text_; }
  std::size_t text_length() const noexcept { return text_.size(); }

  std::size_t distinct_count(std::size_t n) const;
  /// Distinct factors of length n in lexicographic order.
  std::vector<Word> factors(std::size_t n) const;
  bool contains(std::span<const Letter> w) const;

  /// Smallest R such that every window of length R of the text contains
  /// every length-n factor of the text (boundary windows included).
  std::size_t observed_recurrence(std::size_t n) const;

 private:
  // Calls f(sa_begin, sa_end) for each class of suffixes sharing a length-n prefix.
  template <class F>
  void for_each_class(std::size_t n, F&& f) const;

  std::vector<Letter> text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> lcp_;  // lcp_[i] = lcp(sa_[i-1], sa_[i]), lcp_[0] = 0
};

/// The factors of length <= max_length of a substitution fixed point, read
/// off a prefix long enough that the factor counts stopped changing.
///
/// The prefix starts at max(64 * max_length, 1024) letters and doubles until
/// the counts for every length <= max_length agree between a prefix and its
/// double. Queries for words longer than max_length answer "occurs in the
/// prefix", which is sound but not complete.
class Language {
 public:
  Language(const Substitution& sub, std::size_t max_length, std::size_t min_prefix = 0);

  const Substitution& substitution() const noexcept { return sub_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t alphabet_size() const noexcept { return sub_.alphabet_size(); }
  std::size_t prefix_length() const noexcept { return index_.text_length(); }
  std::span<const Letter> prefix() const noexcept { return index_.text(); }
  const FactorIndex& index() const noexcept { return index_; }

  /// C(n); throws InvalidInput for n > max_length.
  std::size_t complexity(std::size_t n) const;
  std::vector<Word> factors(std::size_t n) const;
  bool contains(std::span<const Letter> w) const { return index_.contains(w); }

  std::vector<Letter> left_extensions(std::span<const Letter> w) const;
  std::vector<Letter> right_extensions(std::span<const Letter> w) const;
  bool is_left_special(std::span<const Letter> w) const { return left_extensions(w).size() >= 2; }
  bool is_right_special(std::span<const Letter> w) const {
    return right_extensions(w).size() >= 2;
  }

 private:
  void check_length(std::size_t n) const;

  Substitution sub_;
  std::size_t max_length_;
  FactorIndex index_;
};

/// L(u) ∩ A^n for the fixed point of `sub`.
std::vector<Word> factors_of_length(const Substitution& sub, std::size_t n);

}  // namespace parry
