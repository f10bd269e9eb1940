#include "parry/palindromes.hpp"

#include <algorithm>
#include <functional>

#include "parry/errors.hpp"
#include "parry/export.hpp"
#include "parry/substitution.hpp"

namespace parry {

std::string_view to_string(Center c) noexcept {
  switch (c) {
    case Center::empty:
      return "eps";
    case Center::zero:
      return "0";
    case Center::one:
      return "1";
  }
  return "?";
}

Center center_of(std::span<const Letter> p) {
  if (!is_palindrome(p)) throw InvalidInput("\"" + render(p) + "\" is not a palindrome");
  if (p.size() % 2 == 0) return Center::empty;
  switch (p[p.size() / 2]) {
    case 0:
      return Center::zero;
    case 1:
      return Center::one;
    default:
      throw InvalidInput("center letter of \"" + render(p) + "\" is not binary");
  }
}

Center center_evolution(Center c, const QuadraticParams& params) noexcept {
  switch (c) {
    case Center::empty:
      return Center::one;
    case Center::zero:
      return params.a() % 2 ? Center::zero : Center::empty;
    case Center::one:
      return params.b() % 2 ? Center::zero : Center::empty;
  }
  return c;
}

std::vector<Letter> palindromic_extensions(const Language& language, std::span<const Letter> p) {
  if (!is_palindrome(p)) throw InvalidInput("\"" + render(p) + "\" is not a palindrome");
  if (p.size() + 2 > language.max_length()) {
    throw InvalidInput("palindromic extensions of length-" + std::to_string(p.size()) +
                       " words need a language bound of at least " +
                       std::to_string(p.size() + 2));
  }
  if (!language.contains(p)) throw InvalidInput("\"" + render(p) + "\" is not a factor");
  std::vector<Letter> out;
  std::vector<Letter> probe(p.size() + 2);
  std::copy(p.begin(), p.end(), probe.begin() + 1);
  for (std::size_t z = 0; z < language.alphabet_size(); ++z) {
    probe.front() = probe.back() = static_cast<Letter>(z);
    if (language.contains(probe)) out.push_back(static_cast<Letter>(z));
  }
  return out;
}

std::vector<PalindromeRecord> palindromes_of_length(const Language& language, std::size_t n) {
  if (n + 2 > language.max_length()) {
    throw InvalidInput("palindromes of length " + std::to_string(n) +
                       " need a language bound of at least " + std::to_string(n + 2));
  }
  std::vector<PalindromeRecord> out;
  for (auto& w : language.factors(n)) {
    if (!w.is_palindrome()) continue;
    PalindromeRecord rec;
    if (n % 2 == 1) rec.middle = w[n / 2];
    rec.extensions = palindromic_extensions(language, w);
    rec.word = std::move(w);
    out.push_back(std::move(rec));
  }
  return out;
}

PalindromeTable palindromic_complexity(const Language& language, std::size_t n_max,
                                       bool classify) {
  const std::size_t need = classify ? n_max + 2 : n_max;
  if (need > language.max_length()) {
    throw InvalidInput("palindromic complexity up to " + std::to_string(n_max) +
                       " needs a language bound of at least " + std::to_string(need));
  }
  PalindromeTable table;
  table.source = Source::oracle;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!classify) {
      auto fs = language.factors(n);
      table.counts.push_back(static_cast<std::size_t>(
          std::count_if(fs.begin(), fs.end(), [](const Word& w) { return w.is_palindrome(); })));
      continue;
    }
    std::size_t none = 0, two = 0, one = 0;
    const auto records = palindromes_of_length(language, n);
    for (const auto& r : records) {
      if (r.extensions.empty()) ++none;
      else if (r.extensions.size() == 1) ++one;
      else ++two;
    }
    table.counts.push_back(records.size());
    table.maximal.push_back(none);
    table.two_extensions.push_back(two);
    table.one_extension.push_back(one);
  }
  return table;
}

const std::array<ParityCase, 4>& palindrome_parity_cases() {
  using K = PalindromeRule::Kind;
  static const std::array<ParityCase, 4> cases{{
      // b even, a odd
      {"i", true, false,
       {{{2, K::tower_interval, 2, -1, -1}}, 1},
       {{{3, K::tower_interval, 2, 0, 0}}, 2}},
      // a, b even
      {"ii", false, false,
       {{{2, K::tower_interval, 2, -1, 0}}, 1},
       {{{2, K::at_most_u1}, {2, K::tower_interval, 2, 0, 1}}, 1}},
      // b odd, a even
      {"iii", false, true,
       {{{2, K::tower_interval, 3, -1, -1}}, 1},
       {{{3, K::tower_interval, 1, 0, 0, 1, 3, 2}}, 2}},
      // a, b odd
      {"iv", true, true,
       {{{1, K::at_most_u1}}, 0},
       {{{2, K::at_most_v1}, {4, K::tower_interval, 1, 0, 0, 2}}, 3}},
  }};
  return cases;
}

const ParityCase& parity_case(const QuadraticParams& params) {
  const bool a_odd = params.a() % 2 == 1;
  const bool b_odd = params.b() % 2 == 1;
  for (const auto& c : palindrome_parity_cases()) {
    if (c.a_odd == a_odd && c.b_odd == b_odd) return c;
  }
  throw std::logic_error("parity table is incomplete");
}

namespace {

bool rule_holds(const PalindromeRule& rule, std::size_t n, const UVTower& tower) {
  const auto& params = tower.params();
  switch (rule.kind) {
    case PalindromeRule::Kind::at_most_u1:
      return n <= params.a() - 1;
    case PalindromeRule::Kind::at_most_v1:
      return n <= params.b();
    case PalindromeRule::Kind::tower_interval:
      break;
  }
  for (std::size_t k = rule.k_min;; ++k) {
    const long lo = static_cast<long>(rule.stride * k) + rule.lower_offset;
    const long hi = static_cast<long>(rule.stride * k) + rule.upper_offset;
    if (lo < 1 || hi < 1) continue;
    if (static_cast<std::size_t>(std::max(lo, hi)) > tower.depth()) {
      throw std::logic_error("U/V tower too shallow for length " + std::to_string(n));
    }
    if (tower.v_length(static_cast<std::size_t>(lo)) >= n) return false;
    if (rule.modulus != 0 && k % rule.modulus == rule.excluded_residue) continue;
    if (tower.u_length(static_cast<std::size_t>(hi)) >= n) return true;
  }
}

}  // namespace

unsigned evaluate_rules(const ParityRules& rules, std::size_t n, const UVTower& tower) {
  for (const auto& rule : rules.rules) {
    if (rule_holds(rule, n, tower)) return rule.value;
  }
  return rules.otherwise;
}

PalindromeTable closed_form_palindromic_complexity(const QuadraticParams& params,
                                                   std::size_t n_max) {
  if (params.sturmian()) {
    throw UnsupportedVariant("closed-form palindromic complexity needs a - 1 > b");
  }
  const auto tower = UVTower::covering(params, n_max, 4, 0);
  const auto& pc = parity_case(params);
  PalindromeTable table;
  table.source = Source::closed_form;
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.counts.push_back(
        evaluate_rules(n % 2 == 0 ? pc.even_lengths : pc.odd_lengths, n, tower));
  }
  return table;
}

PalindromeTable palindromic_complexity(const Substitution& sub, std::size_t n_max, Source mode) {
  if (mode == Source::oracle) return palindromic_complexity(Language(sub, n_max + 2), n_max);
  auto params = sub.quadratic_params();
  if (!params || params->sturmian()) {
    throw UnsupportedVariant(
        "closed-form palindromic complexity needs phi(0) = 0^a 1, phi(1) = 0^b 1 with a-1 > b");
  }
  return closed_form_palindromic_complexity(*params, n_max);
}

TMapPalindromeReport t_map_palindrome_check(std::span<const Letter> p, const Language& language,
                                            const QuadraticParams& params) {
  if (!language.contains(p)) throw InvalidInput("\"" + render(p) + "\" is not a factor");
  TMapPalindromeReport r;
  r.p = Word(p);
  r.tp = t_map(p, params);
  if (r.tp.size() + 2 > language.max_length()) {
    throw InvalidInput("T(p) has length " + std::to_string(r.tp.size()) +
                       "; the language bound must be at least " +
                       std::to_string(r.tp.size() + 2));
  }
  r.is_pal_p = r.p.is_palindrome();
  r.is_pal_tp = r.tp.is_palindrome();
  auto extensions = [&](const Word& w) {
    std::vector<Letter> out;
    for (Letter z = 0; z < 2; ++z) {
      if (language.contains(Word{z} + w + Word{z})) out.push_back(z);
    }
    return out;
  };
  r.ext_p = extensions(r.p);
  r.ext_tp = extensions(r.tp);
  return r;
}

Center expected_v_center(const QuadraticParams& params, std::size_t n) {
  const bool a_odd = params.a() % 2 == 1;
  const bool b_odd = params.b() % 2 == 1;
  if (!b_odd) return n % 2 == 0 ? Center::one : Center::empty;
  if (!a_odd) {
    switch (n % 3) {
      case 0:
        return Center::one;
      case 2:
        return Center::empty;
      default:
        return Center::zero;
    }
  }
  return Center::zero;
}

Center expected_u_center(const QuadraticParams& params, std::size_t n) {
  const bool a_odd = params.a() % 2 == 1;
  const bool b_odd = params.b() % 2 == 1;
  if (!b_odd && a_odd) return n % 2 == 1 ? Center::empty : Center::one;
  if (!b_odd && !a_odd) {
    if (n == 1) return Center::zero;
    return n % 2 == 0 ? Center::empty : Center::one;
  }
  if (b_odd && !a_odd) {
    switch (n % 3) {
      case 1:
        return Center::zero;
      case 2:
        return Center::empty;
      default:
        return Center::one;
    }
  }
  if (n == 1) return Center::empty;
  if (n == 2) return Center::one;
  return Center::zero;
}

bool TowerCenterReport::consistent() const noexcept {
  for (std::size_t i = 0; i < u_centers.size(); ++i) {
    if (u_centers[i] != u_expected[i]) return false;
    if (u_observed[i] && *u_observed[i] != u_centers[i]) return false;
  }
  for (std::size_t i = 0; i < v_centers.size(); ++i) {
    if (v_centers[i] != v_expected[i]) return false;
    if (v_observed[i] && *v_observed[i] != v_centers[i]) return false;
  }
  return std::all_of(containments.begin(), containments.end(),
                     [](const CentralContainment& c) { return c.holds; });
}

TowerCenterReport classify_tower_centers(const QuadraticParams& params, std::size_t depth,
                                         std::size_t materialize_cap) {
  if (params.sturmian()) {
    throw UnsupportedVariant("tower centers are defined for a - 1 > b only");
  }
  const UVTower tower(params, depth, materialize_cap);
  TowerCenterReport r{params, {}, {}, {}, {}, {}, {}, {}};
  Center u = (params.a() - 1) % 2 == 0 ? Center::empty : Center::zero;
  Center v = params.b() % 2 == 0 ? Center::empty : Center::zero;
  for (std::size_t n = 1; n <= depth; ++n) {
    if (n > 1) {
      u = center_evolution(u, params);
      v = center_evolution(v, params);
    }
    r.u_centers.push_back(u);
    r.v_centers.push_back(v);
    r.u_expected.push_back(expected_u_center(params, n));
    r.v_expected.push_back(expected_v_center(params, n));
    r.u_observed.push_back(tower.u_materialized(n) ? std::optional(center_of(tower.u_word(n)))
                                                   : std::nullopt);
    r.v_observed.push_back(tower.v_materialized(n) ? std::optional(center_of(tower.v_word(n)))
                                                   : std::nullopt);
  }

  const bool a_odd = params.a() % 2 == 1;
  const bool b_odd = params.b() % 2 == 1;
  const std::size_t v_step = !b_odd ? 2 : (!a_odd ? 3 : 1);
  for (std::size_t n = 1; n + v_step <= depth; ++n) {
    if (!tower.v_materialized(n + v_step)) break;
    r.containments.push_back({'V', n, 'V', n + v_step,
                              is_central_factor(tower.v_word(n), tower.v_word(n + v_step))});
  }
  // U(n) contains V(n + shift) centrally.
  long shift = 0;
  std::size_t first = 1;
  if (!a_odd && !b_odd) shift = -1, first = 2;
  if (a_odd && b_odd) shift = -2, first = 3;
  for (std::size_t n = first; n <= depth; ++n) {
    if (!tower.u_materialized(n)) break;
    const auto inner = static_cast<std::size_t>(static_cast<long>(n) + shift);
    r.containments.push_back(
        {'V', inner, 'U', n, is_central_factor(tower.v_word(inner), tower.u_word(n))});
  }
  return r;
}

namespace {

struct Generator {
  Center center;
  std::string name;
  bool w_tower;
  std::size_t stride;
  long offset;
};

std::vector<Generator> branch_generators(const QuadraticParams& params) {
  const bool a_odd = params.a() % 2 == 1;
  const bool b_odd = params.b() % 2 == 1;
  if (!b_odd && a_odd) {
    return {{Center::empty, "V(2n-1)", false, 2, -1},
            {Center::one, "V(2n)", false, 2, 0},
            {Center::zero, "W(n)", true, 1, 0}};
  }
  if (!b_odd && !a_odd) {
    return {{Center::empty, "V(2n-1)", false, 2, -1}, {Center::one, "V(2n)", false, 2, 0}};
  }
  if (b_odd && !a_odd) {
    return {{Center::zero, "V(3n-2)", false, 3, -2},
            {Center::empty, "V(3n-1)", false, 3, -1},
            {Center::one, "V(3n)", false, 3, 0}};
  }
  return {{Center::zero, "V(n)", false, 1, 0}};
}

}  // namespace

std::vector<BranchSpec> infinite_branches(const QuadraticParams& params,
                                          std::size_t length_budget) {
  if (params.sturmian()) {
    throw UnsupportedVariant("palindromic branches are described for a - 1 > b only");
  }
  std::vector<BranchSpec> out;
  std::size_t longest = 0;
  for (const auto& g : branch_generators(params)) {
    BranchSpec branch;
    branch.center = g.center;
    branch.generator = g.name;
    Word current = g.w_tower ? Word{0} : power(0, params.b());
    std::size_t index = 1;
    for (std::size_t n = 1;; ++n) {
      const auto target = static_cast<std::size_t>(static_cast<long>(g.stride * n) + g.offset);
      while (index < target) {
        current = t_map(current, params);
        ++index;
      }
      branch.indices.push_back(target);
      branch.central_factors.push_back(current);
      longest = std::max(longest, current.size());
      if (current.size() > length_budget && branch.central_factors.size() >= 2) break;
    }
    // Keep factors within budget, but at least two to show nesting.
    while (branch.central_factors.size() > 2 &&
           branch.central_factors.back().size() > length_budget) {
      branch.central_factors.pop_back();
      branch.indices.pop_back();
    }
    out.push_back(std::move(branch));
  }

  longest = 0;
  for (const auto& branch : out) {
    for (const auto& w : branch.central_factors) longest = std::max(longest, w.size());
  }
  const auto prefix =
      fixed_point_letters(quadratic_substitution(params), 64 * std::max(length_budget, longest));
  for (auto& branch : out) {
    bool ok = true;
    for (std::size_t i = 0; i < branch.central_factors.size() && ok; ++i) {
      const auto& w = branch.central_factors[i];
      ok = w.is_palindrome() && center_of(w) == branch.center;
      if (ok && i + 1 < branch.central_factors.size()) {
        ok = is_central_factor(w, branch.central_factors[i + 1]);
      }
      if (ok) {
        std::boyer_moore_horspool_searcher searcher(w.begin(), w.end());
        ok = std::search(prefix.begin(), prefix.end(), searcher) != prefix.end();
      }
    }
    branch.verified = ok;
  }
  return out;
}

ReversalReport reversal_closure_probe(const Language& language, std::size_t n_max) {
  if (n_max > language.max_length()) {
    throw InvalidInput("reversal probe up to " + std::to_string(n_max) +
                       " needs a language bound of at least " + std::to_string(n_max));
  }
  ReversalReport r;
  r.n_max = n_max;
  r.closed_up_to = n_max;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto fs = language.factors(n);
    std::size_t pals = 0;
    for (const auto& w : fs) {
      if (w.is_palindrome()) {
        ++pals;
      } else if (!r.witness && !language.contains(w.reversed())) {
        r.witness = w;
        r.closed_up_to = n - 1;
      }
    }
    r.palindromes.push_back(pals);
  }
  std::size_t n0 = n_max + 1;
  while (n0 > 0 && r.palindromes[n0 - 1] == 0) --n0;
  if (n0 + 1 <= n_max) r.vanishing_from = n0;
  return r;
}

ReversalReport reversal_closure_probe(const Substitution& sub, std::size_t n_max) {
  return reversal_closure_probe(Language(sub, n_max), n_max);
}

bool IdentityReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport identity_report(const QuadraticParams& params, const Language& language,
                               std::size_t n_max) {
  if (params.sturmian()) throw UnsupportedVariant("identities are stated for a - 1 > b");
  const auto complexity = factor_complexity(language, n_max + 1);
  const auto pal = palindromic_complexity(language, n_max + 2, false);
  const auto tower = UVTower::covering(params, n_max + 2, 2, 0);

  IdentityReport r{params, n_max, {}};
  auto P = [&](std::size_t n) { return static_cast<long>(pal.counts[n]); };
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long sum_lhs = P(n + 1) + P(n);
    const long sum_rhs = complexity.delta(n) + 2;
    r.checks.push_back({"palindrome_sum", n, sum_lhs, sum_rhs, sum_lhs == sum_rhs});

    long expected_step = 0;
    if (tower.v_index_of_length(n)) expected_step = 1;
    if (tower.u_index_of_length(n)) expected_step = -1;
    const long step = P(n + 2) - P(n);
    r.checks.push_back({"palindrome_step", n, step, expected_step, step == expected_step});

    const long second = complexity.delta(n + 1) - complexity.delta(n);
    r.checks.push_back({"second_difference", n, second, step, second == step});
  }
  return r;
}

IdentityReport verify_identities(const QuadraticParams& params, std::size_t n_max) {
  if (params.sturmian()) throw UnsupportedVariant("identities are stated for a - 1 > b");
  const Language language(quadratic_substitution(params), n_max + 2);
  auto report = identity_report(params, language, n_max);
  if (!report.all_passed()) {
    throw VerificationFailure("palindrome/complexity identity violated for " + params.to_string(),
                              to_json(report));
  }
  return report;
}

}  // namespace parry
