#include <random>
#include <string>

#include "doctest.h"
#include "parry/errors.hpp"
#include "parry/quadratic.hpp"
#include "parry/renyi.hpp"

using namespace parry;

namespace {

// Strict lexicographic test on 400 digits, every shift up to 200.
bool brute_admissible(const RenyiExpansion& e) {
  std::vector<unsigned> t;
  for (std::size_t i = 1; i <= 400; ++i) t.push_back(e.digit(i));
  for (std::size_t j = 1; j < 200; ++j) {
    bool smaller = false;
    for (std::size_t i = 0; i + j < t.size() && i < 200; ++i) {
      if (t[i + j] != t[i]) {
        smaller = t[i + j] < t[i];
        break;
      }
    }
    if (!smaller) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("text and JSON forms") {
  auto e = RenyiExpansion::parse("2 1 (1)");
  CHECK(e.preperiod() == std::vector<Digit>{2, 1});
  CHECK(e.period() == std::vector<Digit>{1});
  CHECK(e.to_string() == "2 1 (1)");
  CHECK(RenyiExpansion::parse(" 3 ( 1 ) ").to_string() == "3 (1)");
  CHECK(RenyiExpansion::from_json(e.to_json()) == e);
  CHECK(RenyiExpansion::from_json(R"({"preperiod":[3],"period":[1]})") ==
        RenyiExpansion({3}, {1}));
  CHECK_THROWS_AS(RenyiExpansion::parse("3 1"), InvalidInput);
  CHECK_THROWS_AS(RenyiExpansion::parse("3 (1"), InvalidInput);
  CHECK_THROWS_AS(RenyiExpansion::parse("3 (1) 2"), InvalidInput);
  CHECK_THROWS_AS(RenyiExpansion::parse("3 ()"), InvalidInput);
  CHECK_THROWS_AS(RenyiExpansion::from_json(R"({"period":[1]})"), InvalidInput);
  CHECK(e.digit(1) == 2);
  CHECK(e.digit(7) == 1);
  CHECK_THROWS_AS(e.digit(0), InvalidInput);
}

TEST_CASE("minimal representation") {
  CHECK(RenyiExpansion::parse("2 1 (1)").minimized() == RenyiExpansion::parse("2 (1)"));
  CHECK(RenyiExpansion::parse("3 (1 1)").minimized() == RenyiExpansion::parse("3 (1)"));
  CHECK(RenyiExpansion::parse("3 1 2 (1 2)").minimized() == RenyiExpansion::parse("3 (1 2)"));
  CHECK(RenyiExpansion::parse("3 1 (2)").is_minimal());
  CHECK(RenyiExpansion::parse("2 (0)").is_simple());
}

TEST_CASE("Parry admissibility examples") {
  CHECK(parry_check(RenyiExpansion({3}, {1})).admissible);
  auto equal_shift = parry_check(RenyiExpansion({2}, {2}));
  CHECK_FALSE(equal_shift.admissible);
  auto larger_shift = parry_check(RenyiExpansion({2, 1}, {3}));
  CHECK_FALSE(larger_shift.admissible);
  CHECK(larger_shift.violating_shift == 3u);
  CHECK_FALSE(parry_check(RenyiExpansion({}, {1})).admissible);
  CHECK_FALSE(parry_check(RenyiExpansion({}, {2, 1})).admissible);
  CHECK_THROWS_AS(parry_check(std::span<const Digit>{}, std::span<const Digit>{}), InvalidInput);
  CHECK_THROWS_AS(RenyiExpansion({1}, {}), InvalidInput);
}

TEST_CASE("every quadratic expansion a b^omega is admissible") {
  for (unsigned a = 2; a <= 21; ++a) {
    for (unsigned b = 1; b + 1 <= a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(parry_check(RenyiExpansion({a}, {b})).admissible);
    }
  }
}

TEST_CASE("admissibility agrees with a long-window comparison") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> digit(0, 3), len(0, 3), plen(1, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Digit> pre(len(rng)), per(plen(rng));
    for (auto& d : pre) d = digit(rng);
    for (auto& d : per) d = digit(rng);
    RenyiExpansion e(pre, per);
    CAPTURE(e.to_string());
    CHECK(parry_check(e).admissible == brute_admissible(e));
  }
}

TEST_CASE("quadratic parameter validation") {
  CHECK_NOTHROW(QuadraticParams(2, 1));
  CHECK(QuadraticParams(2, 1).sturmian());
  CHECK_FALSE(QuadraticParams(3, 1).sturmian());
  CHECK_THROWS_AS(QuadraticParams(3, 3), InvalidParams);
  CHECK_THROWS_AS(QuadraticParams(3, 0), InvalidParams);
  CHECK_THROWS_AS(QuadraticParams(1, 1), InvalidParams);
}
