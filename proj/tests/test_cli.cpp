#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parry::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "--a", "3", "--b", "1", "--n-max", "20", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 21);
  CHECK(r.out.find(",no\n") == std::string::npos);
  CHECK(r.out.find("\n20,26,1,0,26,0,yes\n") != std::string::npos);

  auto s = run({"analyze", "--a", "2", "--b", "1", "--n-max", "30", "--format", "json"});
  CHECK(s.code == 0);
  auto j = json::parse(s.out);
  CHECK(j["notice"].get<std::string>().find("Sturmian") != std::string::npos);
  for (const auto& row : j["rows"]) CHECK(row["C"] == row["n"].get<int>() + 1);

  CHECK(run({"analyze", "--a", "3", "--b", "3"}).code == 2);
  CHECK(run({"analyze", "--a", "3"}).code == 2);
  CHECK(run({"analyze", "--a", "3", "--b", "1", "--digits", "3 (1)"}).code == 2);
  CHECK(run({"analyze", "--digits", "3 1 (2)", "--n-max", "10"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--a-max", "6", "--n-max", "120", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["points"].size() == 15);
  CHECK(j["failed"] == 0);

  auto st = json::parse(run({"verify", "--a-max", "2", "--format", "json"}).out);
  REQUIRE(st["points"].size() == 1);
  CHECK(st["points"][0]["sturmian"] == true);
  for (const auto& c : st["points"][0]["checks"]) CHECK(c["name"] != "identities");

  auto d = run({"verify", "--digits", "2 1 (1)", "--format", "json"});
  CHECK(d.code == 0);
  auto dj = json::parse(d.out);
  CHECK(dj["witness"] == "102");
  CHECK(dj["vanishing_from"] == 7);

  CHECK(run({"verify", "--a-max", "20"}).code == 2);
  CHECK(run({"verify", "--digits", "2 1 (3)"}).code == 2);
}

TEST_CASE("thin wrappers") {
  auto w = run({"word", "--a", "3", "--b", "1", "--length", "14"});
  CHECK(w.code == 0);
  CHECK(w.out == "00010001000101\n");
  CHECK(run({"word", "--digits", "2 1 (1)", "--length", "8"}).out == "00100102\n");

  auto ok = run({"parry-check", "--digits", "3 (1)"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  auto bad = run({"parry-check", "--digits", "2 1 (3)", "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["violating_shift"] == 3);

  auto bi = run({"beta-integers", "--a", "3", "--b", "1", "--count", "5"});
  CHECK(bi.code == 0);
  CHECK(bi.out == "0, 1, 2, 3, 3.41421356237\ngaps 0001\n");

  auto be = run({"beta-expand", "--a", "3", "--b", "1", "--x", "1", "--count", "3"});
  CHECK(be.out == "1.00\n");
  CHECK(run({"beta-expand", "--a", "3", "--b", "1", "--x", "abc"}).code == 2);

  auto sp = run({"specials", "--a", "3", "--b", "1", "--length", "2", "--format", "json"});
  auto sj = json::parse(sp.out);
  CHECK(sj["tower"]["levels"][1]["V"] == "0100010");

  auto pal = run({"palindromes", "--a", "3", "--b", "1", "--length", "1", "--format", "csv"});
  CHECK(pal.out == "word,center,extensions,maximal\n0,0,{0,1},no\n1,1,{0},no\n");
  auto br = run({"palindromes", "--a", "4", "--b", "2", "--branches", "--budget", "500"});
  CHECK(br.code == 0);
  CHECK(br.out.find("NOT VERIFIED") == std::string::npos);
  CHECK(run({"palindromes", "--a", "2", "--b", "1", "--branches"}).code == 2);
}

TEST_CASE("exit codes and precision") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"nonsense"}).code == 2);
  auto p = run({"beta-integers", "--a", "3", "--b", "1", "--count", "50", "--precision", "8",
                "--tolerance", "1e-60"});
  CHECK(p.code == 3);

  setenv("PARRY_PRECISION", "40", 1);
  auto v = json::parse(run({"verify", "--a-max", "3", "--n-max", "20", "--format", "json"}).out);
  CHECK(v["precision"] == 40);
  setenv("PARRY_PRECISION", "abc", 1);
  CHECK(run({"verify", "--a-max", "3"}).code == 2);
  unsetenv("PARRY_PRECISION");
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::string> args{"verify", "--a-max", "5", "--n-max", "60", "--format",
                                      "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> a2{"analyze", "--a", "5", "--b", "2", "--n-max", "40"};
  CHECK(run(a2).out == run(a2).out);
}
