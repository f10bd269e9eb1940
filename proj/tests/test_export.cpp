#include "doctest.h"
#include "json.hpp"
#include "parry/export.hpp"

using namespace parry;
using nlohmann::json;

TEST_CASE("complexity table exports") {
  auto t = closed_form_complexity(QuadraticParams(3, 1), 3);
  CHECK(to_csv(t) ==
        "n,C,deltaC,source\n0,1,1,closed_form\n1,2,1,closed_form\n2,3,2,closed_form\n"
        "3,5,1,closed_form\n");
  auto j = json::parse(to_json(t));
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][2]["deltaC"] == 2);
}

TEST_CASE("palindrome table exports") {
  Language L(quadratic_substitution(QuadraticParams(3, 1)), 6);
  auto t = palindromic_complexity(L, 4);
  const auto csv = to_csv(t);
  CHECK(csv.rfind("n,P,maximal_count,two_ext_count\n", 0) == 0);
  CHECK(csv.find("\n2,1,1,0\n") != std::string::npos);
  auto j = json::parse(to_json(t));
  CHECK(j["rows"][1]["two_ext_count"] == 1);
}

TEST_CASE("tower lengths are decimal strings") {
  UVTower t(QuadraticParams(6, 1), 60, 100);
  auto j = json::parse(to_json(t));
  CHECK(j["schema"] == 1);
  CHECK(j["levels"][0]["U"] == "00000");
  CHECK(j["levels"][59]["U_length"].is_string());
  CHECK(j["levels"][59]["U_length"].get<std::string>().size() > 40);
  CHECK(to_csv(t).rfind("k,U_length,V_length\n1,5,1\n", 0) == 0);
}

TEST_CASE("report exports") {
  QuadraticParams p(3, 1);
  Language L(quadratic_substitution(p), 12);
  auto s = json::parse(to_json(special_factors(L, 2)));
  CHECK(s["left_special"] == json::array({"00", "01"}));
  auto r = json::parse(to_json(reversal_closure_probe(L, 10)));
  CHECK(r["closed"] == true);
  CHECK(r["witness"].is_null());
  auto c = json::parse(to_json(classify_tower_centers(p, 4)));
  CHECK(c["consistent"] == true);
  auto b = json::parse(to_json(p, infinite_branches(p, 500)));
  CHECK(b["branches"][0]["center"] == "0");
}
