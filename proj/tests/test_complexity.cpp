#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "parry/complexity.hpp"
#include "parry/errors.hpp"

using namespace parry;

namespace {

std::string str(const Word& w) { return w.to_string(10); }

}  // namespace

TEST_CASE("T-map") {
  QuadraticParams p(3, 1);
  CHECK(str(t_map(Word{0}, p)) == "0100010");
  CHECK(str(t_map(Word{0, 0}, p)) == "01000100010");
  CHECK(str(t_map(Word{}, QuadraticParams(5, 2))) == "00100");
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < 100; ++i) {
    Word w;
    for (int j = 0; j < i % 17; ++j) w.push_back(static_cast<Letter>(bit(rng)));
    QuadraticParams q(6, 2);
    const auto t = t_map(w, q);
    CHECK(t.size() == 2 * 2 + 1 + 7 * w.count(0) + 3 * w.count(1));
    CHECK(str(t) == oracle::t_map(str(w), 6, 2));
  }
}

TEST_CASE("U/V tower of (3,1)") {
  UVTower t(QuadraticParams(3, 1), 4);
  CHECK(str(t.v_word(1)) == "0");
  CHECK(str(t.u_word(1)) == "00");
  CHECK(str(t.v_word(2)) == "0100010");
  CHECK(str(t.u_word(2)) == "01000100010");
  CHECK(t.v_length(3) == 27);
  CHECK(t.v_word(3).size() == 27);
  CHECK(t.u_length(4) == 143);
  CHECK(t.v_index_of_length(7) == 2u);
  CHECK(t.u_index_of_length(11) == 2u);
  CHECK_FALSE(t.u_index_of_length(12));
  CHECK(t.interval_containing(9) == 2u);
  CHECK_FALSE(t.interval_containing(5));
}

TEST_CASE("tower words against string oracle") {
  for (unsigned a = 3; a <= 6; ++a) {
    for (unsigned b = 1; b + 2 <= a; ++b) {
      UVTower t(QuadraticParams(a, b), 5);
      const auto us = oracle::u_tower(a, b, 5);
      const auto vs = oracle::v_tower(a, b, 5);
      for (std::size_t k = 1; k <= 5; ++k) {
        CHECK(str(t.u_word(k)) == us[k - 1]);
        CHECK(str(t.v_word(k)) == vs[k - 1]);
        CHECK(t.u_length(k) == us[k - 1].size());
        if (k > 1) CHECK(t.v_word(k).starts_with(t.v_word(k - 1)));
        CHECK(t.u_word(k).starts_with(t.v_word(k)));
      }
    }
  }
}

TEST_CASE("exact lengths beyond the cap and interleaving") {
  UVTower t(QuadraticParams(5, 2), 40, 1000);
  CHECK(t.materialized_u() < 40);
  CHECK_THROWS_AS(t.u_word(40), InvalidInput);
  for (std::size_t n = 1; n < 40; ++n) {
    CHECK(t.v_length(n) < t.u_length(n));
    CHECK(t.u_length(n) < t.v_length(n + 1));
  }
  CHECK_THROWS_AS(UVTower(QuadraticParams(3, 2), 3), UnsupportedVariant);
  CHECK_THROWS_AS(UVTower(QuadraticParams(3, 1), 0), InvalidInput);
}

TEST_CASE("tower words are factors with the expected specialness") {
  for (auto [a, b] : {std::pair{3u, 1u}, {4u, 2u}, {5u, 3u}, {6u, 1u}}) {
    QuadraticParams p(a, b);
    UVTower t(p, 3);
    Language L(quadratic_substitution(p), 400);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto& u = t.u_word(k);
      const auto& v = t.v_word(k);
      CHECK(L.contains(u));
      CHECK(L.is_left_special(u));
      CHECK_FALSE(L.is_left_special(u + Word{0}));
      CHECK_FALSE(L.is_left_special(u + Word{1}));
      CHECK(L.is_left_special(v + Word{0}));
      CHECK(L.is_left_special(v + Word{1}));
    }
  }
}

TEST_CASE("special factors") {
  auto sub = quadratic_substitution(QuadraticParams(3, 1));
  auto r1 = left_special_factors(sub, 1);
  CHECK(r1.left_special == std::vector<Word>{Word{0}});
  Language L(sub, 60);
  auto c = factor_complexity(L, 50);
  for (std::size_t n = 1; n <= 50; ++n) {
    auto r = special_factors(L, n);
    CHECK(static_cast<long>(r.left_special.size()) == c.delta(n));
    for (const auto& w : r.left_special) {
      if (w.count(1) == 0) continue;
      CHECK(w.starts_with(Word{0, 1}));
    }
  }
  CHECK_THROWS_AS(special_factors(L, 60), InvalidInput);
}

TEST_CASE("factor complexity of (3,1)") {
  auto sub = quadratic_substitution(QuadraticParams(3, 1));
  auto oracle_table = factor_complexity(sub, 12, Source::oracle);
  auto closed = factor_complexity(sub, 12, Source::closed_form);
  const std::vector<long> delta{1, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1};
  const std::vector<std::size_t> C{2, 3, 5, 6, 7, 8, 9, 10, 12, 14, 16, 18};
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(oracle_table.delta(n) == delta[n - 1]);
    CHECK(oracle_table.complexity(n) == C[n - 1]);
    CHECK(closed.complexity(n) == C[n - 1]);
  }
  CHECK(closed.source == Source::closed_form);
  CHECK(to_string(Source::oracle) == "oracle");
}

TEST_CASE("closed form matches the oracle over the grid") {
  for (unsigned a = 3; a <= 6; ++a) {
    for (unsigned b = 1; b + 2 <= a; ++b) {
      QuadraticParams p(a, b);
      auto o = factor_complexity(quadratic_substitution(p), 60, Source::oracle);
      auto c = closed_form_complexity(p, 60);
      CHECK(o.counts == c.counts);
      for (std::size_t n = 0; n <= 60; ++n) CHECK((o.delta(n) == 1 || o.delta(n) == 2));
    }
  }
}

TEST_CASE("Sturmian boundary and unsupported closed forms") {
  auto sub = quadratic_substitution(QuadraticParams(2, 1));
  auto t = factor_complexity(sub, 60, Source::oracle);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(t.complexity(n) == n + 1);
  CHECK_THROWS_AS(factor_complexity(sub, 10, Source::closed_form), UnsupportedVariant);
  CHECK_THROWS_AS(factor_complexity(parry_substitution(RenyiExpansion::parse("3 1 (2)")), 10,
                                    Source::closed_form),
                  UnsupportedVariant);
}

TEST_CASE("zero blocks have length a or b") {
  for (auto [a, b] : {std::pair{3u, 1u}, {5u, 2u}, {6u, 4u}}) {
    const auto u = oracle::quadratic_word(a, b, 20'000);
    for (std::size_t start = 0; start + 200 <= u.size(); start += 997) {
      const auto window = u.substr(start, 200);
      std::size_t i = 0;
      while (i < window.size()) {
        if (window[i] != '0') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < window.size() && window[j] == '0') ++j;
        if (i > 0 && j < window.size()) CHECK((j - i == a || j - i == b));
        i = j;
      }
    }
  }
}

TEST_CASE("T preserves membership") {
  std::mt19937 rng(9);
  for (auto [a, b] : {std::pair{3u, 1u}, {4u, 1u}, {5u, 3u}}) {
    QuadraticParams p(a, b);
    Language L(quadratic_substitution(p), 120);
    const auto prefix = L.prefix();
    std::uniform_int_distribution<std::size_t> pos(0, prefix.size() - 20), len(1, 8);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 200; ++i) {
      Word w(prefix.subspan(pos(rng), len(rng)));
      CHECK(L.contains(t_map(w, p)));
      Word r;
      for (std::size_t j = len(rng); j > 0; --j) r.push_back(static_cast<Letter>(bit(rng)));
      CHECK(L.contains(r) == L.contains(t_map(r, p)));
    }
  }
}
