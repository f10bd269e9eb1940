#include "parry/export.hpp"

#include <sstream>

#include "json.hpp"

namespace parry {

using nlohmann::json;

namespace {

json document(std::string_view kind) {
  json j;
  j["schema"] = 1;
  j["kind"] = kind;
  return j;
}

json params_json(const QuadraticParams& p) { return {{"a", p.a()}, {"b", p.b()}}; }

json letters_json(const std::vector<Letter>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

json extension_map_json(const std::map<Word, std::vector<Letter>>& m) {
  json out = json::object();
  for (const auto& [w, xs] : m) out[w.to_string()] = letters_json(xs);
  return out;
}

}  // namespace

std::string to_csv(const ComplexityTable& table) {
  std::ostringstream os;
  os << "n,C,deltaC,source\n";
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    os << n << ',' << table.complexity(n) << ',' << table.delta(n) << ','
       << to_string(table.source) << '\n';
  }
  return os.str();
}

std::string to_json(const ComplexityTable& table) {
  auto j = document("complexity");
  j["source"] = to_string(table.source);
  j["rows"] = json::array();
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    j["rows"].push_back({{"n", n}, {"C", table.complexity(n)}, {"deltaC", table.delta(n)}});
  }
  return j.dump(2);
}

std::string to_csv(const PalindromeTable& table) {
  std::ostringstream os;
  os << "n,P,maximal_count,two_ext_count\n";
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    os << n << ',' << table.counts[n] << ',';
    if (table.classified()) os << table.maximal[n] << ',' << table.two_extensions[n];
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string to_json(const PalindromeTable& table) {
  auto j = document("palindromic_complexity");
  j["source"] = to_string(table.source);
  j["rows"] = json::array();
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    json row{{"n", n}, {"P", table.counts[n]}};
    if (table.classified()) {
      row["maximal_count"] = table.maximal[n];
      row["two_ext_count"] = table.two_extensions[n];
      row["one_ext_count"] = table.one_extension[n];
    }
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2);
}

std::string to_csv(const UVTower& tower) {
  std::ostringstream os;
  os << "k,U_length,V_length\n";
  for (std::size_t k = 1; k <= tower.depth(); ++k) {
    os << k << ',' << tower.u_length(k).get_str() << ',' << tower.v_length(k).get_str() << '\n';
  }
  return os.str();
}

std::string to_json(const UVTower& tower) {
  auto j = document("uv_tower");
  j["params"] = params_json(tower.params());
  j["levels"] = json::array();
  for (std::size_t k = 1; k <= tower.depth(); ++k) {
    json level{{"k", k},
               {"U_length", tower.u_length(k).get_str()},
               {"V_length", tower.v_length(k).get_str()}};
    if (tower.u_materialized(k)) level["U"] = tower.u_word(k).to_string();
    if (tower.v_materialized(k)) level["V"] = tower.v_word(k).to_string();
    j["levels"].push_back(std::move(level));
  }
  return j.dump(2);
}

std::string to_json(const IdentityReport& report) {
  auto j = document("identity_report");
  j["params"] = params_json(report.params);
  j["n_max"] = report.n_max;
  j["passed"] = report.all_passed();
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back(
        {{"identity", c.identity}, {"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  }
  return j.dump(2);
}

std::string to_json(const SpecialFactorReport& report) {
  auto j = document("special_factors");
  j["length"] = report.length;
  j["left_special"] = words_json(report.left_special);
  j["right_special"] = words_json(report.right_special);
  j["left_extensions"] = extension_map_json(report.left_extensions);
  j["right_extensions"] = extension_map_json(report.right_extensions);
  return j.dump(2);
}

std::string to_json(const ReversalReport& report) {
  auto j = document("reversal_probe");
  j["n_max"] = report.n_max;
  j["closed"] = report.closed();
  j["closed_up_to"] = report.closed_up_to;
  j["witness"] = report.witness ? json(report.witness->to_string()) : json(nullptr);
  j["P"] = report.palindromes;
  j["vanishing_from"] = report.vanishing_from ? json(*report.vanishing_from) : json(nullptr);
  return j.dump(2);
}

std::string to_json(const TowerCenterReport& report) {
  auto j = document("tower_centers");
  j["params"] = params_json(report.params);
  j["consistent"] = report.consistent();
  auto centers = [](const std::vector<Center>& cs, const std::vector<Center>& expected,
                    const std::vector<std::optional<Center>>& observed) {
    json out = json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      json row{{"k", i + 1},
               {"center", to_string(cs[i])},
               {"expected", to_string(expected[i])}};
      row["observed"] = observed[i] ? json(to_string(*observed[i])) : json(nullptr);
      out.push_back(std::move(row));
    }
    return out;
  };
  j["U"] = centers(report.u_centers, report.u_expected, report.u_observed);
  j["V"] = centers(report.v_centers, report.v_expected, report.v_observed);
  j["containments"] = json::array();
  for (const auto& c : report.containments) {
    j["containments"].push_back({{"inner", std::string(1, c.inner_kind) + "(" +
                                               std::to_string(c.inner_index) + ")"},
                                 {"outer", std::string(1, c.outer_kind) + "(" +
                                               std::to_string(c.outer_index) + ")"},
                                 {"holds", c.holds}});
  }
  return j.dump(2);
}

std::string to_json(const QuadraticParams& params, const std::vector<BranchSpec>& branches) {
  auto j = document("palindromic_branches");
  j["params"] = params_json(params);
  j["branches"] = json::array();
  for (const auto& b : branches) {
    json lengths = json::array();
    for (const auto& w : b.central_factors) lengths.push_back(w.size());
    j["branches"].push_back({{"center", to_string(b.center)},
                             {"generator", b.generator},
                             {"indices", b.indices},
                             {"lengths", lengths},
                             {"verified", b.verified}});
  }
  return j.dump(2);
}

}  // namespace parry
