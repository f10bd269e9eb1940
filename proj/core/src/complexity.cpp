#include "parry/complexity.hpp"

#include <algorithm>

#include "parry/errors.hpp"

namespace parry {

Word t_map(std::span<const Letter> w, const QuadraticParams& params) {
  const unsigned a = params.a();
  const unsigned b = params.b();
  std::vector<Letter> out;
  out.reserve(2 * b + 1 + (a + 1) * w.size());
  out.insert(out.end(), b, 0);
  out.push_back(1);
  for (Letter x : w) {
    out.insert(out.end(), x == 0 ? a : b, 0);
    out.push_back(1);
  }
  out.insert(out.end(), b, 0);
  return Word(std::move(out));
}

UVTower::UVTower(const QuadraticParams& params, std::size_t depth, std::size_t materialize_cap)
    : params_(params) {
  if (params.sturmian()) {
    throw UnsupportedVariant("the U/V tower degenerates in the Sturmian case b = a - 1");
  }
  if (depth == 0) throw InvalidInput("tower depth must be at least 1");

  const unsigned a = params.a();
  const unsigned b = params.b();
  struct Counts {
    mpz_class zeros, ones;
  };
  auto step = [&](const Counts& c) {
    return Counts{2 * b + a * c.zeros + b * c.ones, 1 + c.zeros + c.ones};
  };
  Counts u{a - 1, 0};
  Counts v{b, 0};
  for (std::size_t n = 1; n <= depth; ++n) {
    if (n > 1) {
      u = step(u);
      v = step(v);
    }
    u_len_.push_back(u.zeros + u.ones);
    v_len_.push_back(v.zeros + v.ones);
  }

  auto materialize = [&](Word first, const std::vector<mpz_class>& lengths,
                         std::vector<Word>& out) {
    for (std::size_t n = 0; n < depth; ++n) {
      if (lengths[n] > materialize_cap) break;
      if (n == 0) {
        out.push_back(std::move(first));
      } else {
        out.push_back(t_map(out.back(), params_));
      }
    }
  };
  materialize(power(0, a - 1), u_len_, u_words_);
  materialize(power(0, b), v_len_, v_words_);
}

UVTower UVTower::covering(const QuadraticParams& params, std::size_t n, std::size_t extra,
                          std::size_t materialize_cap) {
  if (params.sturmian()) {
    throw UnsupportedVariant("the U/V tower degenerates in the Sturmian case b = a - 1");
  }
  // |V(k)| grows at least by a factor 2 per level.
  std::size_t depth = 1;
  mpz_class v = params.b();
  mpz_class ones = 0;
  while (v <= n) {
    mpz_class zeros = v - ones;
    mpz_class z2 = 2 * params.b() + params.a() * zeros + params.b() * ones;
    ones = 1 + zeros + ones;
    v = z2 + ones;
    ++depth;
  }
  return UVTower(params, depth + extra, materialize_cap);
}

const Word& UVTower::u_word(std::size_t n) const {
  if (!u_materialized(n)) {
    throw InvalidInput("U(" + std::to_string(n) + ") is beyond the materialization cap");
  }
  return u_words_[n - 1];
}

const Word& UVTower::v_word(std::size_t n) const {
  if (!v_materialized(n)) {
    throw InvalidInput("V(" + std::to_string(n) + ") is beyond the materialization cap");
  }
  return v_words_[n - 1];
}

std::optional<std::size_t> UVTower::interval_containing(std::size_t n) const {
  for (std::size_t k = 0; k < depth(); ++k) {
    if (v_len_[k] < n && u_len_[k] >= n) return k + 1;
    if (v_len_[k] >= n) break;
  }
  return std::nullopt;
}

std::optional<std::size_t> UVTower::v_index_of_length(std::size_t n) const {
  for (std::size_t k = 0; k < depth(); ++k) {
    if (v_len_[k] == n) return k + 1;
  }
  return std::nullopt;
}

std::optional<std::size_t> UVTower::u_index_of_length(std::size_t n) const {
  for (std::size_t k = 0; k < depth(); ++k) {
    if (u_len_[k] == n) return k + 1;
  }
  return std::nullopt;
}

UVTower uv_tower(const QuadraticParams& params, std::size_t depth, std::size_t materialize_cap) {
  return UVTower(params, depth, materialize_cap);
}

SpecialFactorReport special_factors(const Language& language, std::size_t n) {
  if (n + 1 > language.max_length()) {
    throw InvalidInput("special factors of length " + std::to_string(n) +
                       " need a language bound of at least " + std::to_string(n + 1));
  }
  SpecialFactorReport report;
  report.length = n;
  for (auto& w : language.factors(n)) {
    auto left = language.left_extensions(w);
    auto right = language.right_extensions(w);
    if (left.size() >= 2) report.left_special.push_back(w);
    if (right.size() >= 2) report.right_special.push_back(w);
    report.left_extensions.emplace(w, std::move(left));
    report.right_extensions.emplace(w, std::move(right));
  }
  return report;
}

SpecialFactorReport left_special_factors(const Substitution& sub, std::size_t n) {
  return special_factors(Language(sub, n + 1), n);
}

std::string_view to_string(Source source) noexcept {
  return source == Source::oracle ? "oracle" : "closed_form";
}

ComplexityTable factor_complexity(const Language& language, std::size_t n_max) {
  if (n_max + 1 > language.max_length()) {
    throw InvalidInput("factor complexity up to " + std::to_string(n_max) +
                       " needs a language bound of at least " + std::to_string(n_max + 1));
  }
  ComplexityTable table;
  table.source = Source::oracle;
  for (std::size_t n = 0; n <= n_max + 1; ++n) table.counts.push_back(language.complexity(n));
  return table;
}

ComplexityTable closed_form_complexity(const QuadraticParams& params, std::size_t n_max) {
  const auto tower = UVTower::covering(params, n_max + 1, 1, 0);
  ComplexityTable table;
  table.source = Source::closed_form;
  table.counts = {1, 2};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t delta = tower.interval_containing(n) ? 2 : 1;
    table.counts.push_back(table.counts.back() + delta);
  }
  return table;
}

ComplexityTable factor_complexity(const Substitution& sub, std::size_t n_max, Source mode) {
  if (mode == Source::oracle) return factor_complexity(Language(sub, n_max + 1), n_max);
  auto params = sub.quadratic_params();
  if (!params || params->sturmian()) {
    throw UnsupportedVariant("closed-form complexity needs phi(0) = 0^a 1, phi(1) = 0^b 1 with a-1 > b");
  }
  return closed_form_complexity(*params, n_max);
}

}  // namespace parry
