#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "parry/factor_index.hpp"
#include "parry/quadratic.hpp"
#include "parry/substitution.hpp"
#include "parry/word.hpp"

namespace parry {

/// T(w) = 0^b 1 phi(w) 0^b. Preserves membership in L(u_beta), left
/// specialness, palindromicity and palindromic extensions.
Word t_map(std::span<const Letter> w, const QuadraticParams& params);

inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

/// Maximal left special factors U(n) and total bispecial factors V(n):
///   U(1) = 0^(a-1), V(1) = 0^b, U(n) = T(U(n-1)), V(n) = T(V(n-1)).
/// Words are kept while their length is within the cap; lengths are exact
/// for every level through the letter-count recurrence
///   zeros(T w) = 2b + a zeros(w) + b ones(w),  ones(T w) = 1 + |w|.
class UVTower {
 public:
  /// Throws UnsupportedVariant for Sturmian params, InvalidInput for depth 0.
  UVTower(const QuadraticParams& params, std::size_t depth,
          std::size_t materialize_cap = kDefaultMaterializeCap);

  /// Smallest tower whose last V-length exceeds n (plus `extra` levels).
  static UVTower covering(const QuadraticParams& params, std::size_t n, std::size_t extra = 3,
                          std::size_t materialize_cap = kDefaultMaterializeCap);

  const QuadraticParams& params() const noexcept { return params_; }
  std::size_t depth() const noexcept { return u_len_.size(); }

  // Indices are 1-based as in U(1), V(1).
  const mpz_class& u_length(std::size_t n) const { return u_len_.at(n - 1); }
  const mpz_class& v_length(std::size_t n) const { return v_len_.at(n - 1); }
  bool u_materialized(std::size_t n) const { return n >= 1 && n <= u_words_.size(); }
  bool v_materialized(std::size_t n) const { return n >= 1 && n <= v_words_.size(); }
  /// Throws InvalidInput when the word was not materialized.
  const Word& u_word(std::size_t n) const;
  const Word& v_word(std::size_t n) const;
  std::size_t materialized_u() const noexcept { return u_words_.size(); }
  std::size_t materialized_v() const noexcept { return v_words_.size(); }

  /// The k with |V(k)| < n <= |U(k)|, if any within the tower.
  std::optional<std::size_t> interval_containing(std::size_t n) const;
  /// n = |V(k)| resp. n = |U(k)| for some k within the tower.
  std::optional<std::size_t> v_index_of_length(std::size_t n) const;
  std::optional<std::size_t> u_index_of_length(std::size_t n) const;

 private:
  QuadraticParams params_;
  std::vector<mpz_class> u_len_, v_len_;
  std::vector<Word> u_words_, v_words_;
};

UVTower uv_tower(const QuadraticParams& params, std::size_t depth,
                 std::size_t materialize_cap = kDefaultMaterializeCap);

struct SpecialFactorReport {
  std::size_t length = 0;
  std::vector<Word> left_special;
  std::vector<Word> right_special;
  /// Extension sets of every factor of this length.
  std::map<Word, std::vector<Letter>> left_extensions;
  std::map<Word, std::vector<Letter>> right_extensions;
};

/// Needs n + 1 <= language.max_length().
SpecialFactorReport special_factors(const Language& language, std::size_t n);
SpecialFactorReport left_special_factors(const Substitution& sub, std::size_t n);

enum class Source { oracle, closed_form };
std::string_view to_string(Source source) noexcept;

/// C(0 .. n_max + 1), so that Delta C(n) = C(n+1) - C(n) is defined for n <= n_max.
struct ComplexityTable {
  Source source = Source::oracle;
  std::vector<std::size_t> counts;

  std::size_t n_max() const noexcept { return counts.size() - 2; }
  std::size_t complexity(std::size_t n) const { return counts.at(n); }
  long delta(std::size_t n) const {
    return static_cast<long>(counts.at(n + 1)) - static_cast<long>(counts.at(n));
  }
};

/// Counts enumerated factors. Needs n_max + 1 <= language.max_length().
ComplexityTable factor_complexity(const Language& language, std::size_t n_max);

/// Integrates Delta C(n) = 2 on (|V(k)|, |U(k)|], 1 elsewhere, from C(0) = 1,
/// C(1) = 2. Throws UnsupportedVariant for Sturmian params.
ComplexityTable closed_form_complexity(const QuadraticParams& params, std::size_t n_max);

/// closed_form mode needs a quadratic non-Sturmian substitution
/// (UnsupportedVariant otherwise).
ComplexityTable factor_complexity(const Substitution& sub, std::size_t n_max, Source mode);

}  // namespace parry
