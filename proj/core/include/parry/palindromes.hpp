#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parry/complexity.hpp"
#include "parry/factor_index.hpp"
#include "parry/quadratic.hpp"
#include "parry/word.hpp"

namespace parry {

/// Middle letter of an odd palindrome, or the empty word for even ones.
enum class Center { empty, zero, one };
std::string_view to_string(Center c) noexcept;

/// Throws InvalidInput if p is not a palindrome or its middle letter is not 0 or 1.
Center center_of(std::span<const Letter> p);

/// Center of T(p) given the center of p:
///   eps -> 1,  0 -> (a odd ? 0 : eps),  1 -> (b odd ? 0 : eps).
Center center_evolution(Center c, const QuadraticParams& params) noexcept;

struct PalindromeRecord {
  Word word;
  /// Middle letter for odd lengths; empty for even ones.
  std::optional<Letter> middle;
  /// z with z word z in the language.
  std::vector<Letter> extensions;

  bool maximal() const noexcept { return extensions.empty(); }
};

/// {z : z p z in L(u)}. Throws InvalidInput when p is not a palindrome, not
/// a factor, or |p| + 2 exceeds the language bound.
std::vector<Letter> palindromic_extensions(const Language& language, std::span<const Letter> p);

/// Palindromic factors of length n with their extensions. Needs
/// n + 2 <= language.max_length().
std::vector<PalindromeRecord> palindromes_of_length(const Language& language, std::size_t n);

/// P(0 .. n_max). Oracle tables also carry, per length, how many
/// palindromes have no, two, or one palindromic extension.
struct PalindromeTable {
  Source source = Source::oracle;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> maximal;
  std::vector<std::size_t> two_extensions;
  std::vector<std::size_t> one_extension;

  std::size_t n_max() const noexcept { return counts.size() - 1; }
  bool classified() const noexcept { return !maximal.empty(); }
};

/// Counts enumerated palindromes; with `classify`, needs n_max + 2 <= max_length.
PalindromeTable palindromic_complexity(const Language& language, std::size_t n_max,
                                       bool classify = true);
/// Closed form for a - 1 > b >= 1, dispatched on the parities of a and b.
PalindromeTable closed_form_palindromic_complexity(const QuadraticParams& params,
                                                   std::size_t n_max);
PalindromeTable palindromic_complexity(const Substitution& sub, std::size_t n_max, Source mode);

/// One clause of the closed-form palindromic complexity. Clauses are tried
/// in order; the first that holds gives the value.
struct PalindromeRule {
  enum class Kind {
    at_most_u1,      // n <= |U(1)| = a - 1
    at_most_v1,      // n <= |V(1)| = b
    tower_interval,  // |V(stride k + lower_offset)| < n <= |U(stride k + upper_offset)|
  };
  unsigned value = 0;
  Kind kind = Kind::tower_interval;
  unsigned stride = 1;
  int lower_offset = 0;
  int upper_offset = 0;
  unsigned k_min = 1;
  /// k ≢ excluded_residue (mod modulus); modulus 0 disables.
  unsigned modulus = 0;
  unsigned excluded_residue = 0;
};

struct ParityRules {
  std::vector<PalindromeRule> rules;
  unsigned otherwise = 0;
};

struct ParityCase {
  std::string_view label;  // "i" .. "iv"
  bool a_odd = false;
  bool b_odd = false;
  ParityRules even_lengths;
  ParityRules odd_lengths;
};

/// The four cases, keyed by the parities of (a, b).
const std::array<ParityCase, 4>& palindrome_parity_cases();
const ParityCase& parity_case(const QuadraticParams& params);
unsigned evaluate_rules(const ParityRules& rules, std::size_t n, const UVTower& tower);

/// Whether T preserves palindromicity and the palindromic extensions of p.
struct TMapPalindromeReport {
  Word p;
  Word tp;
  bool is_pal_p = false;
  bool is_pal_tp = false;
  std::vector<Letter> ext_p;
  std::vector<Letter> ext_tp;

  bool consistent() const noexcept { return is_pal_p == is_pal_tp && ext_p == ext_tp; }
};

/// Throws InvalidInput if p is not a factor or |T(p)| + 2 exceeds the
/// language bound.
TMapPalindromeReport t_map_palindrome_check(std::span<const Letter> p, const Language& language,
                                            const QuadraticParams& params);

struct CentralContainment {
  char inner_kind = 'V';
  std::size_t inner_index = 0;
  char outer_kind = 'V';
  std::size_t outer_index = 0;
  bool holds = false;
};

/// Centers of U(n), V(n) for n = 1..depth: `*_centers` by iterating
/// center_evolution, `*_expected` from the parity-case description,
/// `*_observed` read off materialized words. `containments` lists the
/// central-factor relations the parity case predicts, checked on
/// materialized words.
struct TowerCenterReport {
  QuadraticParams params;
  std::vector<Center> u_centers, v_centers;
  std::vector<Center> u_expected, v_expected;
  std::vector<std::optional<Center>> u_observed, v_observed;
  std::vector<CentralContainment> containments;

  bool consistent() const noexcept;
};

Center expected_u_center(const QuadraticParams& params, std::size_t n);
Center expected_v_center(const QuadraticParams& params, std::size_t n);

TowerCenterReport classify_tower_centers(const QuadraticParams& params, std::size_t depth,
                                         std::size_t materialize_cap = 200'000);

/// Central factors of one infinite palindromic branch.
struct BranchSpec {
  Center center = Center::empty;
  /// Generator description, e.g. "V(2n-1)" or "W(n)".
  std::string generator;
  std::vector<std::size_t> indices;
  std::vector<Word> central_factors;
  /// Every central factor is a palindrome with `center`, central in the
  /// next one, and occurs in the fixed-point prefix of length
  /// 64 * max(budget, longest factor).
  bool verified = false;
};

/// Throws UnsupportedVariant for Sturmian params.
std::vector<BranchSpec> infinite_branches(const QuadraticParams& params,
                                          std::size_t length_budget = 10'000);

struct ReversalReport {
  std::size_t n_max = 0;
  /// Largest n <= n_max such that all factors of length <= n have their
  /// reversal in the language.
  std::size_t closed_up_to = 0;
  /// Shortest, then lexicographically least, factor whose reversal is absent.
  std::optional<Word> witness;
  /// P(0 .. n_max).
  std::vector<std::size_t> palindromes;
  /// Smallest n0 with P(n) = 0 for n0 <= n <= n_max, reported only when
  /// that run covers at least two lengths: then P vanishes for every n >= n0,
  /// since a longer palindrome has a central palindrome of length n0 or n0+1.
  std::optional<std::size_t> vanishing_from;

  bool closed() const noexcept { return !witness.has_value(); }
};

/// Needs n_max <= language.max_length().
ReversalReport reversal_closure_probe(const Language& language, std::size_t n_max);
ReversalReport reversal_closure_probe(const Substitution& sub, std::size_t n_max);

struct IdentityCheck {
  std::string identity;
  std::size_t n = 0;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};

struct IdentityReport {
  QuadraticParams params;
  std::size_t n_max = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const noexcept;
};

/// For 1 <= n <= n_max, from oracle tables:
///   "palindrome_sum":    P(n+1) + P(n) = Delta C(n) + 2
///   "palindrome_step":   P(n+2) - P(n) = +1 at |V(k)|, -1 at |U(k)|, 0 else
///   "second_difference": Delta C(n+1) - Delta C(n) = P(n+2) - P(n)
/// Needs n_max + 2 <= language.max_length().
IdentityReport identity_report(const QuadraticParams& params, const Language& language,
                               std::size_t n_max);

/// Same checks; throws VerificationFailure with the JSON report on any
/// violation. Throws UnsupportedVariant for Sturmian params.
IdentityReport verify_identities(const QuadraticParams& params, std::size_t n_max);

}  // namespace parry
