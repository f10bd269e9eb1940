#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "format.hpp"
#include "json.hpp"
#include "parry/beta.hpp"
#include "parry/complexity.hpp"
#include "parry/errors.hpp"
#include "parry/export.hpp"
#include "parry/factor_index.hpp"
#include "parry/palindromes.hpp"
#include "parry/substitution.hpp"

namespace parry::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct InputOptions {
  std::optional<unsigned> a, b;
  std::string digits;
};

struct Input {
  std::optional<QuadraticParams> params;
  std::optional<RenyiExpansion> expansion;

  Substitution substitution() const {
    return params ? quadratic_substitution(*params) : parry_substitution(*expansion);
  }
  RenyiExpansion renyi() const { return params ? renyi_of_quadratic(*params) : *expansion; }
  BetaValue beta(unsigned precision) const {
    return params ? beta_of(*params, precision) : beta_of(*expansion, precision);
  }
  std::string label() const { return params ? params->to_string() : expansion->to_string(); }
};

void add_input(CLI::App* app, InputOptions& in) {
  auto* a = app->add_option("--a", in.a, "parameter a of d(1) = a b b b ...");
  auto* b = app->add_option("--b", in.b, "parameter b");
  auto* d = app->add_option("--digits", in.digits, "Renyi digits, e.g. \"2 1 (1)\"");
  d->excludes(a)->excludes(b);
}

Input resolve(const InputOptions& in) {
  if (!in.digits.empty()) return {std::nullopt, RenyiExpansion::parse(in.digits)};
  if (in.a && in.b) return {QuadraticParams(*in.a, *in.b), std::nullopt};
  if (in.a || in.b) throw UsageError("--a and --b must be given together");
  throw UsageError("an input is required: --a/--b or --digits");
}

void add_format(CLI::App* app, Format& format) {
  app->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case));
}

unsigned resolve_precision(std::optional<unsigned> flag) {
  unsigned p = kDefaultPrecision;
  if (flag) {
    p = *flag;
  } else if (const char* env = std::getenv("PARRY_PRECISION"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw UsageError("PARRY_PRECISION must be a positive integer");
    p = static_cast<unsigned>(v);
  }
  if (p < 8 || p > 100000) throw UsageError("precision must be between 8 and 100000 digits");
  return p;
}

std::string params_or_dash(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

// analyze -------------------------------------------------------------------

struct AnalyzeOptions {
  InputOptions input;
  std::size_t n_max = 20;
  Format format = Format::text;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const Input input = resolve(o.input);
  const auto sub = input.substitution();
  const auto params = sub.quadratic_params();
  const bool closed = params && !params->sturmian();

  std::string notice;
  if (params && params->sturmian()) {
    notice = "Sturmian parameters " + params->to_string() +
             ": closed forms do not apply; C(n) = n + 1";
  } else if (!params) {
    notice = "no closed form for " + input.label() + "; oracle values only";
  }

  const Language language(sub, o.n_max + 1);
  const auto c = factor_complexity(language, o.n_max);
  const auto p = palindromic_complexity(language, o.n_max, false);
  std::optional<ComplexityTable> cc;
  std::optional<PalindromeTable> pc;
  if (closed) {
    cc = closed_form_complexity(*params, o.n_max);
    pc = closed_form_palindromic_complexity(*params, o.n_max);
  }

  struct Row {
    std::size_t n, C, P;
    long dC;
    std::optional<std::size_t> Cc, Pc;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    Row r{n, c.complexity(n), p.counts[n], c.delta(n), std::nullopt, std::nullopt, true};
    if (closed) {
      r.Cc = cc->complexity(n);
      r.Pc = pc->counts[n];
      r.agree = r.C == *r.Cc && r.P == *r.Pc && c.delta(n) == cc->delta(n);
    }
    all_agree = all_agree && r.agree;
    rows.push_back(r);
  }

  switch (o.format) {
    case Format::json: {
      json j{{"schema", 1}, {"kind", "analyze"}, {"input", input.label()}, {"n_max", o.n_max}};
      j["closed_form"] = closed;
      if (!notice.empty()) j["notice"] = notice;
      j["all_agree"] = all_agree;
      j["rows"] = json::array();
      for (const auto& r : rows) {
        json row{{"n", r.n}, {"C", r.C}, {"deltaC", r.dC}, {"P", r.P}, {"agree", r.agree}};
        row["C_closed"] = r.Cc ? json(*r.Cc) : json(nullptr);
        row["P_closed"] = r.Pc ? json(*r.Pc) : json(nullptr);
        j["rows"].push_back(std::move(row));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      if (!notice.empty()) err << "note: " << notice << '\n';
      out << "n,C,deltaC,P,C_closed,P_closed,agree\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.C << ',' << r.dC << ',' << r.P << ','
            << (r.Cc ? std::to_string(*r.Cc) : "") << ',' << (r.Pc ? std::to_string(*r.Pc) : "")
            << ',' << (closed ? (r.agree ? "yes" : "no") : "") << '\n';
      }
      break;
    case Format::text:
      if (!notice.empty()) out << "# " << notice << '\n';
      out << std::setw(6) << "n" << std::setw(10) << "C" << std::setw(8) << "dC" << std::setw(5)
          << "P" << std::setw(10) << "C*" << std::setw(5) << "P*" << "  agree\n";
      for (const auto& r : rows) {
        out << std::setw(6) << r.n << std::setw(10) << r.C << std::setw(8) << r.dC << std::setw(5)
            << r.P << std::setw(10) << params_or_dash(r.Cc) << std::setw(5)
            << params_or_dash(r.Pc) << "  " << (closed ? (r.agree ? "yes" : "NO") : "-")
            << '\n';
      }
      if (closed) out << (all_agree ? "all agree\n" : "DISAGREEMENT\n");
      break;
  }
  return all_agree ? kOk : kFailed;
}

// verify --------------------------------------------------------------------

struct VerifyOptions {
  InputOptions input;
  unsigned a_max = 6;
  std::size_t n_max = 120;
  std::size_t max_points = 100;
  std::optional<unsigned> precision;
  Format format = Format::text;
};

struct Check {
  std::string name;
  bool pass = false;
  json detail;
};

struct PointResult {
  QuadraticParams params;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

template <class Expected>
Check compare_counts(const std::string& name, std::size_t n_max, Expected expected,
                     const std::vector<std::size_t>& observed) {
  Check check{name, true, nullptr};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t e = expected(n);
    if (e != observed[n]) {
      check.pass = false;
      check.detail = {{"n", n}, {"expected", e}, {"observed", observed[n]}};
      break;
    }
  }
  return check;
}

PointResult verify_point(const QuadraticParams& params, std::size_t n_max, unsigned precision) {
  PointResult result{params, {}};
  const auto sub = quadratic_substitution(params);
  const Language language(sub, n_max + 2);
  const auto c = factor_complexity(language, n_max);
  const auto p = palindromic_complexity(language, n_max, false);

  if (params.sturmian()) {
    result.checks.push_back(compare_counts(
        "complexity", n_max, [](std::size_t n) { return n + 1; }, c.counts));
    result.checks.push_back(compare_counts(
        "palindromes", n_max, [](std::size_t n) -> std::size_t { return n % 2 ? 2 : 1; },
        p.counts));
  } else {
    const auto cc = closed_form_complexity(params, n_max);
    const auto pc = closed_form_palindromic_complexity(params, n_max);
    result.checks.push_back(compare_counts(
        "complexity", n_max, [&](std::size_t n) { return cc.complexity(n); }, c.counts));
    result.checks.push_back(compare_counts(
        "palindromes", n_max, [&](std::size_t n) { return pc.counts[n]; }, p.counts));

    const auto report = identity_report(params, language, n_max);
    Check identities{"identities", report.all_passed(), nullptr};
    if (!identities.pass) {
      identities.detail = json::array();
      for (const auto& chk : report.checks) {
        if (!chk.pass) {
          identities.detail.push_back(
              {{"identity", chk.identity}, {"n", chk.n}, {"lhs", chk.lhs}, {"rhs", chk.rhs}});
        }
      }
    }
    result.checks.push_back(std::move(identities));

    const auto centers = classify_tower_centers(params, 8);
    Check tc{"tower_centers", centers.consistent(), nullptr};
    if (!tc.pass) tc.detail = json::parse(to_json(centers));
    result.checks.push_back(std::move(tc));
  }

  const auto reversal = reversal_closure_probe(language, std::min<std::size_t>(n_max, 50));
  Check rc{"reversal_closure", reversal.closed(), nullptr};
  if (!rc.pass) rc.detail = {{"witness", reversal.witness->to_string()}};
  result.checks.push_back(std::move(rc));

  const auto beta = beta_of(params, precision);
  const mpf_class deviation = abs(renyi_series_sum(renyi_of_quadratic(params), beta) - 1);
  Check rs{"renyi_sum", deviation < beta.tolerance(), nullptr};
  if (!rs.pass) rs.detail = {{"deviation", decimal(deviation, 6)}};
  result.checks.push_back(std::move(rs));
  return result;
}

json point_json(const PointResult& r) {
  json j{{"a", r.params.a()}, {"b", r.params.b()}, {"sturmian", r.params.sturmian()}};
  j["pass"] = r.pass();
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.is_null()) cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

int verify_digits(const RenyiExpansion& expansion, const VerifyOptions& o, std::ostream& out,
                  std::ostream& err) {
  const auto check = parry_check(expansion);
  if (!check) {
    throw InvalidInput("\"" + expansion.to_string() + "\" fails Parry's test at shift " +
                       std::to_string(*check.violating_shift));
  }
  const auto sub = parry_substitution(expansion);
  const auto report = reversal_closure_probe(sub, o.n_max);
  const bool expect_closed = expansion.preperiod_length() == 1 && expansion.period_length() == 1;
  const bool pass =
      report.closed() == expect_closed && (report.closed() || report.vanishing_from.has_value());

  json j = json::parse(to_json(report));
  j["digits"] = expansion.to_string();
  j["substitution"] = json::parse(sub.to_json());
  j["expected_closed"] = expect_closed;
  j["pass"] = pass;

  switch (o.format) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      out << "n,P\n";
      for (std::size_t n = 0; n < report.palindromes.size(); ++n) {
        out << n << ',' << report.palindromes[n] << '\n';
      }
      break;
    case Format::text:
      out << "digits: " << expansion.to_string() << '\n';
      out << "closed under reversal: " << (report.closed() ? "yes" : "no");
      if (report.witness) {
        out << " (witness " << report.witness->to_string(sub.alphabet_size()) << " at length "
            << report.witness->size() << ")";
      }
      out << '\n';
      out << "P(0.." << o.n_max << "):";
      for (auto v : report.palindromes) out << ' ' << v;
      out << '\n';
      if (report.vanishing_from) {
        out << "P(n) = 0 for " << *report.vanishing_from << " <= n <= " << o.n_max << '\n';
      }
      out << (pass ? "pass\n" : "FAIL\n");
      break;
  }
  if (!pass && o.format != Format::json) err << j.dump(2) << '\n';
  return pass ? kOk : kFailed;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const unsigned precision = resolve_precision(o.precision);
  if (!o.input.digits.empty()) return verify_digits(resolve(o.input).expansion.value(), o, out, err);

  std::vector<QuadraticParams> grid;
  if (o.input.a || o.input.b) {
    grid.push_back(*resolve(o.input).params);
  } else {
    if (o.a_max < 2) throw UsageError("--a-max must be at least 2");
    for (unsigned a = 2; a <= o.a_max; ++a) {
      for (unsigned b = 1; b + 1 <= a; ++b) grid.emplace_back(a, b);
    }
  }
  if (grid.size() > o.max_points) {
    throw UsageError("grid has " + std::to_string(grid.size()) +
                     " points; raise --max-points to run more than " +
                     std::to_string(o.max_points));
  }

  // Fan out in batches; results keep grid order.
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<PointResult> results;
  for (std::size_t start = 0; start < grid.size(); start += workers) {
    std::vector<std::future<PointResult>> batch;
    for (std::size_t i = start; i < std::min(grid.size(), start + workers); ++i) {
      batch.push_back(std::async(std::launch::async, verify_point, grid[i], o.n_max, precision));
    }
    for (auto& f : batch) results.push_back(f.get());
  }

  std::size_t passed = 0;
  json failures = json::array();
  for (const auto& r : results) {
    if (r.pass()) ++passed;
    else failures.push_back(point_json(r));
  }
  const std::size_t failed = results.size() - passed;

  switch (o.format) {
    case Format::json: {
      json j{{"schema", 1}, {"kind", "verify"}, {"n_max", o.n_max}, {"precision", precision}};
      j["points"] = json::array();
      for (const auto& r : results) j["points"].push_back(point_json(r));
      j["passed"] = passed;
      j["failed"] = failed;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,check,pass\n";
      for (const auto& r : results) {
        for (const auto& c : r.checks) {
          out << r.params.a() << ',' << r.params.b() << ',' << c.name << ','
              << (c.pass ? "yes" : "no") << '\n';
        }
      }
      break;
    case Format::text:
      for (const auto& r : results) {
        out << r.params.to_string() << (r.params.sturmian() ? " sturmian" : "") << ':';
        for (const auto& c : r.checks) out << ' ' << c.name << '=' << (c.pass ? "ok" : "FAIL");
        out << '\n';
      }
      out << passed << " passed, " << failed << " failed\n";
      break;
  }
  if (failed > 0) {
    if (o.format != Format::json) {
      err << json{{"schema", 1}, {"kind", "verify_failures"}, {"failures", failures}}.dump(2)
          << '\n';
    }
    return kFailed;
  }
  return kOk;
}

// word ----------------------------------------------------------------------

struct WordOptions {
  InputOptions input;
  std::size_t length = 0;
  Format format = Format::text;
};

int cmd_word(const WordOptions& o, std::ostream& out) {
  const auto sub = resolve(o.input).substitution();
  const auto w = fixed_point_prefix(sub, o.length);
  switch (o.format) {
    case Format::json:
      out << json{{"schema", 1},
                  {"kind", "word"},
                  {"substitution", json::parse(sub.to_json())},
                  {"length", o.length},
                  {"word", w.to_string(sub.alphabet_size())}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "index,letter\n";
      for (std::size_t i = 0; i < w.size(); ++i) out << i << ',' << unsigned(w[i]) << '\n';
      break;
    case Format::text:
      out << w.to_string(sub.alphabet_size()) << '\n';
      break;
  }
  return kOk;
}

// specials ------------------------------------------------------------------

struct SpecialsOptions {
  InputOptions input;
  std::size_t length = 0;
  std::size_t depth = 4;
  Format format = Format::text;
};

std::string letters_text(const std::vector<Letter>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

int cmd_specials(const SpecialsOptions& o, std::ostream& out) {
  const auto sub = resolve(o.input).substitution();
  const auto report = left_special_factors(sub, o.length);
  const auto params = sub.quadratic_params();
  std::optional<UVTower> tower;
  if (params && !params->sturmian() && o.depth > 0) tower = uv_tower(*params, o.depth);
  const auto k = sub.alphabet_size();

  switch (o.format) {
    case Format::json: {
      json j{{"schema", 1}, {"kind", "specials"}};
      j["special_factors"] = json::parse(to_json(report));
      j["special_factors"].erase("schema");
      if (tower) {
        j["tower"] = json::parse(to_json(*tower));
        j["tower"].erase("schema");
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "factor,left_extensions,right_extensions,left_special,right_special\n";
      for (const auto& [w, left] : report.left_extensions) {
        const auto& right = report.right_extensions.at(w);
        out << w.to_string(k) << ',' << letters_text(left) << ',' << letters_text(right) << ','
            << (left.size() >= 2 ? "yes" : "no") << ',' << (right.size() >= 2 ? "yes" : "no")
            << '\n';
      }
      break;
    case Format::text:
      out << "left special factors of length " << o.length << ':';
      for (const auto& w : report.left_special) out << ' ' << w.to_string(k);
      out << "\nright special factors of length " << o.length << ':';
      for (const auto& w : report.right_special) out << ' ' << w.to_string(k);
      out << '\n';
      if (tower) {
        for (std::size_t i = 1; i <= tower->depth(); ++i) {
          out << "|V(" << i << ")| = " << tower->v_length(i).get_str() << "  |U(" << i
              << ")| = " << tower->u_length(i).get_str() << '\n';
        }
        for (std::size_t i = 1; i <= tower->depth(); ++i) {
          if (tower->v_materialized(i) && tower->v_word(i).size() <= 120) {
            out << "V(" << i << ") = " << tower->v_word(i).to_string() << '\n';
          }
          if (tower->u_materialized(i) && tower->u_word(i).size() <= 120) {
            out << "U(" << i << ") = " << tower->u_word(i).to_string() << '\n';
          }
        }
      }
      break;
  }
  return kOk;
}

// palindromes ---------------------------------------------------------------

struct PalindromesOptions {
  InputOptions input;
  std::optional<std::size_t> length;
  std::size_t n_max = 20;
  bool branches = false;
  std::size_t budget = 10'000;
  Format format = Format::text;
};

int cmd_palindromes(const PalindromesOptions& o, std::ostream& out) {
  const auto sub = resolve(o.input).substitution();
  const auto params = sub.quadratic_params();
  const auto k = sub.alphabet_size();
  if (o.branches && !(params && !params->sturmian())) {
    throw UnsupportedVariant("--branches needs quadratic parameters with a - 1 > b");
  }

  if (o.length) {
    const Language language(sub, *o.length + 2);
    const auto records = palindromes_of_length(language, *o.length);
    switch (o.format) {
      case Format::json: {
        json j{{"schema", 1}, {"kind", "palindromes"}, {"length", *o.length}};
        j["palindromes"] = json::array();
        for (const auto& r : records) {
          j["palindromes"].push_back({{"word", r.word.to_string(k)},
                                      {"center", r.middle ? json(*r.middle) : json("eps")},
                                      {"extensions", r.extensions},
                                      {"maximal", r.maximal()}});
        }
        if (o.branches) {
          j["branches"] = json::parse(to_json(*params, infinite_branches(*params, o.budget)));
          j["branches"].erase("schema");
        }
        out << j.dump(2) << '\n';
        return kOk;
      }
      case Format::csv:
        out << "word,center,extensions,maximal\n";
        for (const auto& r : records) {
          out << r.word.to_string(k) << ','
              << (r.middle ? std::to_string(*r.middle) : std::string("eps")) << ','
              << letters_text(r.extensions) << ',' << (r.maximal() ? "yes" : "no") << '\n';
        }
        break;
      case Format::text:
        for (const auto& r : records) {
          out << r.word.to_string(k) << "  extensions " << letters_text(r.extensions)
              << (r.maximal() ? "  maximal" : "") << '\n';
        }
        out << records.size() << " palindromes of length " << *o.length << '\n';
        break;
    }
  } else {
    const Language language(sub, o.n_max + 2);
    const auto table = palindromic_complexity(language, o.n_max);
    std::optional<PalindromeTable> closed;
    if (params && !params->sturmian()) closed = closed_form_palindromic_complexity(*params, o.n_max);
    switch (o.format) {
      case Format::json: {
        json j = json::parse(to_json(table));
        if (closed) {
          j["closed_form"] = closed->counts;
        }
        if (o.branches) {
          j["branches"] = json::parse(to_json(*params, infinite_branches(*params, o.budget)));
          j["branches"].erase("schema");
        }
        out << j.dump(2) << '\n';
        return kOk;
      }
      case Format::csv:
        out << to_csv(table);
        break;
      case Format::text:
        out << std::setw(6) << "n" << std::setw(5) << "P" << std::setw(5) << "P*" << std::setw(9)
            << "maximal" << std::setw(7) << "two" << '\n';
        for (std::size_t n = 0; n <= o.n_max; ++n) {
          out << std::setw(6) << n << std::setw(5) << table.counts[n] << std::setw(5)
              << (closed ? std::to_string(closed->counts[n]) : "-") << std::setw(9)
              << table.maximal[n] << std::setw(7) << table.two_extensions[n] << '\n';
        }
        break;
    }
  }

  if (o.branches && o.format != Format::json) {
    const auto branches = infinite_branches(*params, o.budget);
    out << (o.format == Format::csv ? "center,generator,lengths,verified\n" : "branches:\n");
    for (const auto& b : branches) {
      std::string lengths;
      for (std::size_t i = 0; i < b.central_factors.size(); ++i) {
        if (i) lengths += ' ';
        lengths += std::to_string(b.central_factors[i].size());
      }
      if (o.format == Format::csv) {
        out << to_string(b.center) << ',' << b.generator << ',' << lengths << ','
            << (b.verified ? "yes" : "no") << '\n';
      } else {
        out << "  center " << to_string(b.center) << "  " << b.generator << "  lengths "
            << lengths << (b.verified ? "  verified" : "  NOT VERIFIED") << '\n';
      }
    }
  }
  return kOk;
}

// parry-check ---------------------------------------------------------------

int cmd_parry_check(const std::string& digits, Format format, std::ostream& out) {
  const auto expansion = RenyiExpansion::parse(digits);
  const auto check = parry_check(expansion);
  switch (format) {
    case Format::json: {
      json j{{"schema", 1},
             {"kind", "parry_check"},
             {"digits", expansion.to_string()},
             {"admissible", check.admissible}};
      j["violating_shift"] = check.violating_shift ? json(*check.violating_shift) : json(nullptr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "digits,admissible,violating_shift\n"
          << '"' << expansion.to_string() << "\"," << (check ? "yes" : "no") << ','
          << (check.violating_shift ? std::to_string(*check.violating_shift) : "") << '\n';
      break;
    case Format::text:
      if (check) out << "valid\n";
      else out << "invalid: shift " << *check.violating_shift << " is not smaller\n";
      break;
  }
  return check ? kOk : kFailed;
}

// beta-expand ---------------------------------------------------------------

struct BetaExpandOptions {
  InputOptions input;
  std::string x;
  std::size_t count = 20;
  std::optional<unsigned> precision;
  Format format = Format::text;
};

int cmd_beta_expand(const BetaExpandOptions& o, std::ostream& out) {
  const Input input = resolve(o.input);
  const auto beta = input.beta(resolve_precision(o.precision));
  mpf_class x(0, beta.bits());
  if (x.set_str(o.x, 10) != 0) throw InvalidInput("--x: not a decimal number: " + o.x);
  const auto e = beta_expand(x, beta, o.count);
  switch (o.format) {
    case Format::json: {
      json j{{"schema", 1},
             {"kind", "beta_expansion"},
             {"beta", beta.to_string(30)},
             {"x", o.x},
             {"top_exponent", e.top_exponent},
             {"digits", e.digits},
             {"reconstruction", decimal(e.reconstruct(beta), 30)}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "exponent,digit\n";
      for (std::size_t i = 0; i < e.digits.size(); ++i) {
        out << e.top_exponent - static_cast<int>(i) << ',' << e.digits[i] << '\n';
      }
      break;
    case Format::text:
      out << e.to_string() << '\n';
      break;
  }
  return kOk;
}

// beta-integers -------------------------------------------------------------

struct BetaIntegersOptions {
  InputOptions input;
  std::size_t count = 10;
  double tolerance = 1e-9;
  unsigned shown_digits = 12;
  std::optional<unsigned> precision;
  Format format = Format::text;
};

std::string digits_text(const std::vector<Digit>& ds) {
  std::string s;
  const bool wide = std::any_of(ds.begin(), ds.end(), [](Digit d) { return d > 9; });
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(ds[i]);
  }
  return s.empty() ? "0" : s;
}

int cmd_beta_integers(const BetaIntegersOptions& o, std::ostream& out) {
  const Input input = resolve(o.input);
  const auto beta = input.beta(resolve_precision(o.precision));
  const auto bi = beta_integers(input.renyi(), beta, o.count, o.tolerance);
  const auto k = input.renyi().preperiod_length() + input.renyi().period_length();
  switch (o.format) {
    case Format::json: {
      json j{{"schema", 1}, {"kind", "beta_integers"}, {"beta", beta.to_string(30)}};
      j["values"] = json::array();
      j["expansions"] = json::array();
      for (std::size_t i = 0; i < bi.values.size(); ++i) {
        j["values"].push_back(decimal(bi.values[i], o.shown_digits));
        j["expansions"].push_back(digits_text(bi.expansions[i]));
      }
      j["gaps"] = bi.gaps.to_string(k);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "index,value,expansion,gap\n";
      for (std::size_t i = 0; i < bi.values.size(); ++i) {
        out << i << ',' << decimal(bi.values[i], o.shown_digits) << ','
            << digits_text(bi.expansions[i]) << ','
            << (i < bi.gaps.size() ? std::to_string(bi.gaps[i]) : "") << '\n';
      }
      break;
    case Format::text:
      for (std::size_t i = 0; i < bi.values.size(); ++i) {
        out << (i ? ", " : "") << decimal(bi.values[i], o.shown_digits);
      }
      out << "\ngaps " << bi.gaps.to_string(k) << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor and palindromic complexity of infinite words associated with Parry numbers",
               "parry"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* c_analyze = app.add_subcommand("analyze", "C(n), Delta C(n), P(n): oracle vs closed form");
  add_input(c_analyze, analyze.input);
  c_analyze->add_option("--n-max", analyze.n_max, "largest length")->check(CLI::Range(1, 100000));
  add_format(c_analyze, analyze.format);

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "run the invariant suite over a parameter grid");
  add_input(c_verify, verify.input);
  c_verify->add_option("--a-max", verify.a_max, "grid bound: 2 <= a <= a-max, 1 <= b <= a-1");
  c_verify->add_option("--n-max", verify.n_max, "largest length")->check(CLI::Range(1, 100000));
  c_verify->add_option("--max-points", verify.max_points, "refuse larger grids");
  c_verify->add_option("--precision", verify.precision, "decimal digits");
  add_format(c_verify, verify.format);

  WordOptions word;
  auto* c_word = app.add_subcommand("word", "prefix of the fixed point");
  add_input(c_word, word.input);
  c_word->add_option("--length", word.length, "prefix length")->required();
  add_format(c_word, word.format);

  SpecialsOptions specials;
  auto* c_specials = app.add_subcommand("specials", "special factors and the U/V tower");
  add_input(c_specials, specials.input);
  c_specials->add_option("--length", specials.length, "factor length")->required();
  c_specials->add_option("--depth", specials.depth, "tower depth (0 for none)");
  add_format(c_specials, specials.format);

  PalindromesOptions pals;
  auto* c_pals = app.add_subcommand("palindromes", "palindromic factors and branches");
  add_input(c_pals, pals.input);
  auto* o_len = c_pals->add_option("--length", pals.length, "list palindromes of this length");
  c_pals->add_option("--n-max", pals.n_max, "table up to this length")->excludes(o_len);
  c_pals->add_flag("--branches", pals.branches, "infinite palindromic branches");
  c_pals->add_option("--budget", pals.budget, "longest central factor to build");
  add_format(c_pals, pals.format);

  std::string check_digits;
  Format check_format = Format::text;
  auto* c_check = app.add_subcommand("parry-check", "Parry admissibility of Renyi digits");
  c_check->add_option("--digits", check_digits, "e.g. \"3 (1)\"")->required();
  add_format(c_check, check_format);

  BetaExpandOptions bexp;
  auto* c_bexp = app.add_subcommand("beta-expand", "greedy beta-expansion of x");
  add_input(c_bexp, bexp.input);
  c_bexp->add_option("--x", bexp.x, "nonnegative decimal number")->required();
  c_bexp->add_option("--count", bexp.count, "number of digits");
  c_bexp->add_option("--precision", bexp.precision, "decimal digits");
  add_format(c_bexp, bexp.format);

  BetaIntegersOptions bint;
  auto* c_bint = app.add_subcommand("beta-integers", "first beta-integers and their gaps");
  add_input(c_bint, bint.input);
  c_bint->add_option("--count", bint.count, "how many");
  c_bint->add_option("--tolerance", bint.tolerance, "gap classification tolerance");
  c_bint->add_option("--shown-digits", bint.shown_digits, "significant digits printed");
  c_bint->add_option("--precision", bint.precision, "decimal digits");
  add_format(c_bint, bint.format);

  std::vector<std::string> argv_storage{"parry"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_analyze->parsed()) return cmd_analyze(analyze, out, err);
    if (c_verify->parsed()) return cmd_verify(verify, out, err);
    if (c_word->parsed()) return cmd_word(word, out);
    if (c_specials->parsed()) return cmd_specials(specials, out);
    if (c_pals->parsed()) return cmd_palindromes(pals, out);
    if (c_check->parsed()) return cmd_parry_check(check_digits, check_format, out);
    if (c_bexp->parsed()) return cmd_beta_expand(bexp, out);
    if (c_bint->parsed()) return cmd_beta_integers(bint, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedVariant& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
    return kPrecision;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n' << e.context() << '\n';
    return kVerification;
  }
  return kUsage;
}

}  // namespace parry::cli
