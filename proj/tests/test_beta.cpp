#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "parry/beta.hpp"
#include "parry/errors.hpp"
#include "parry/substitution.hpp"

using namespace parry;

namespace {

mpf_class exact_root(long s, long d, unsigned long bits) {
  mpf_class r(d, bits);
  r = sqrt(r);
  r += s;
  r /= 2;
  return r;
}

double to_double(const mpf_class& x) { return x.get_d(); }

}  // namespace

TEST_CASE("quadratic bases") {
  const auto bits = precision_bits(64);
  auto b31 = beta_of(QuadraticParams(3, 1));
  CHECK(abs(b31.value() - exact_root(4, 8, bits)) < pow10_neg(60, bits));
  CHECK(b31.to_string(9) == "3.41421356");
  CHECK(abs(beta_of(QuadraticParams(2, 1)).value() - exact_root(3, 5, bits)) <
        pow10_neg(60, bits));
  CHECK(abs(beta_of(QuadraticParams(3, 2)).value() - exact_root(4, 12, bits)) <
        pow10_neg(60, bits));
  REQUIRE(b31.exact());
  CHECK(b31.exact()->d == 8);
  CHECK(renyi_of_quadratic(QuadraticParams(3, 1)) == RenyiExpansion({3}, {1}));
  CHECK(renyi_of_quadratic(QuadraticParams(5, 2)) == RenyiExpansion({5}, {2}));
}

TEST_CASE("bisection agrees with the quadratic formula") {
  for (unsigned a = 2; a <= 6; ++a) {
    for (unsigned b = 1; b < a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      auto numeric = beta_of(RenyiExpansion({a, b}, {b}), 40);  // non-minimal: no shortcut
      auto exact = beta_of(QuadraticParams(a, b), 40);
      CHECK(abs(numeric.value() - exact.value()) < exact.tolerance());
    }
  }
}

TEST_CASE("the Renyi series sums to one") {
  for (const char* digits : {"3 (1)", "3 1 (2)", "2 1 (1)", "4 (2 1)", "5 0 (3)"}) {
    CAPTURE(digits);
    auto e = RenyiExpansion::parse(digits);
    REQUIRE(parry_check(e));
    auto beta = beta_of(e);
    CHECK(abs(renyi_series_sum(e, beta) - 1) < beta.tolerance());
  }
  CHECK_THROWS_AS(beta_of(RenyiExpansion::parse("2 (2)")), InvalidInput);
}

TEST_CASE("greedy expansions") {
  auto beta = beta_of(QuadraticParams(3, 1));
  auto one = beta_expand(mpf_class(1, beta.bits()), beta, 5);
  CHECK(one.top_exponent == 0);
  CHECK(one.digits == std::vector<Digit>{1, 0, 0, 0, 0});

  mpf_class x(beta.value() + 1, beta.bits());
  auto e = beta_expand(x, beta, 2);
  CHECK(e.top_exponent == 1);
  CHECK(e.digits == std::vector<Digit>{1, 1});
  CHECK(e.to_string() == "11");
  CHECK(e.integer_digits() == std::vector<Digit>{1, 1});

  auto three = beta_expand(mpf_class(3, beta.bits()), beta, 30);
  CHECK(three.integer_digits() == std::vector<Digit>{3});
  CHECK(abs(three.reconstruct(beta) - 3) < beta.tolerance());

  auto small = beta_expand(mpf_class(0.01, beta.bits()), beta, 3);
  CHECK(small.top_exponent < 0);
  CHECK(small.to_string().rfind("0.", 0) == 0);

  CHECK_THROWS_AS(beta_expand(mpf_class(-1), beta, 3), InvalidInput);
  CHECK_THROWS_AS(beta_expand(mpf_class(1), beta, 0), InvalidInput);
}

TEST_CASE("expansion then reconstruction is the identity on [0, beta)") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto [a, b] : {std::pair{3u, 1u}, {5u, 2u}, {6u, 4u}}) {
    auto beta = beta_of(QuadraticParams(a, b));
    for (int i = 0; i < 50; ++i) {
      mpf_class x(unit(rng), beta.bits());
      x *= beta.value();
      auto e = beta_expand(x, beta, 200);
      CHECK(abs(e.reconstruct(beta) - x) < beta.tolerance());
      for (Digit d : e.digits) CHECK(d <= a);
    }
  }
}

TEST_CASE("gap distances") {
  auto beta = beta_of(QuadraticParams(3, 1));
  auto gaps = gap_distances(RenyiExpansion({3}, {1}), beta);
  REQUIRE(gaps.size() == 2);
  CHECK(abs(gaps[0] - 1) < beta.tolerance());
  mpf_class sqrt2(2, beta.bits());
  sqrt2 = sqrt(sqrt2);
  CHECK(abs(gaps[1] - (sqrt2 - 1)) < beta.tolerance());
  mpf_class tol(1e-9, beta.bits());
  CHECK(gaps.classify(mpf_class(1, beta.bits()), tol) == 0u);
  CHECK_FALSE(gaps.classify(mpf_class(0.7, beta.bits()), tol));

  for (unsigned a = 2; a <= 8; ++a) {
    for (unsigned b = 1; b < a; ++b) {
      auto bv = beta_of(QuadraticParams(a, b));
      auto g = gap_distances(RenyiExpansion({a}, {b}), bv);
      CHECK(g[1] < g[0]);
    }
  }
}

TEST_CASE("first beta-integers") {
  auto beta = beta_of(QuadraticParams(3, 1));
  auto bi = beta_integers(RenyiExpansion({3}, {1}), beta, 5);
  REQUIRE(bi.values.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(abs(bi.values[i] - i) < beta.tolerance());
  CHECK(abs(bi.values[4] - beta.value()) < beta.tolerance());
  CHECK(bi.gaps.to_string() == "0001");
  CHECK(bi.expansions[4] == std::vector<Digit>{1, 0});

  CHECK_THROWS_AS(beta_integers(RenyiExpansion({3}, {1}), beta, 1), InvalidInput);
  CHECK_THROWS_AS(beta_integers(RenyiExpansion({2}, {0}), beta_of(RenyiExpansion({2}, {0})), 5),
                  UnsupportedVariant);
  CHECK_THROWS_AS(beta_integers(RenyiExpansion({2}, {2}), beta, 5), InvalidInput);
}

TEST_CASE("beta-integers agree with greedy brute force") {
  for (auto [a, b] : {std::pair{3u, 1u}, {4u, 2u}, {5u, 3u}, {6u, 1u}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto expected = oracle::beta_integers_below(a, b, 3);
    auto beta = beta_of(QuadraticParams(a, b));
    auto bi = beta_integers(RenyiExpansion({a}, {b}), beta, expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(std::abs(bi.values[i].get_d() - expected[i]) < 1e-9);
    }
  }
}

TEST_CASE("gap letters reproduce the fixed point") {
  auto check = [](const RenyiExpansion& e, const Substitution& sub, std::size_t count) {
    auto bi = beta_integers(e, beta_of(e), count);
    CHECK(bi.gaps == fixed_point_prefix(sub, count - 1));
  };
  check(RenyiExpansion({3}, {1}), quadratic_substitution(QuadraticParams(3, 1)), 1000);
  auto nq = RenyiExpansion::parse("3 1 (2)");
  check(nq, parry_substitution(nq), 1000);
  auto two_period = RenyiExpansion::parse("4 (2 1)");
  check(two_period, parry_substitution(two_period), 500);
}

TEST_CASE("too tight a tolerance is a precision error") {
  auto beta = beta_of(QuadraticParams(3, 1), 8);
  CHECK_THROWS_AS(beta_integers(RenyiExpansion({3}, {1}), beta, 50, 1e-60), PrecisionError);
}

TEST_CASE("precision helpers") {
  CHECK(precision_bits(64) >= 64 * 3.32);
  CHECK(to_double(pow10_neg(3, 128)) == doctest::Approx(1e-3));
  CHECK(to_double(beta_of(QuadraticParams(3, 1), 30).tolerance()) == doctest::Approx(1e-15));
}
