#include "parry/renyi.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "parry/errors.hpp"

namespace parry {

namespace {

std::vector<Digit> parse_digits(std::string_view text, std::string_view whole) {
  std::vector<Digit> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    Digit value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InvalidInput("malformed Renyi expansion \"" + std::string(whole) +
                         "\": expected a nonnegative integer");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw InvalidInput("malformed Renyi expansion \"" + std::string(whole) + "\"");
    }
  }
  return out;
}

// Smallest p' dividing p such that the period is a power of its first p' digits.
std::size_t primitive_period(const std::vector<Digit>& period) {
  const auto p = period.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = period[i] == period[i - d];
    if (ok) return d;
  }
  return p;
}

}  // namespace

RenyiExpansion::RenyiExpansion(std::vector<Digit> preperiod, std::vector<Digit> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw InvalidInput("Renyi expansion needs a nonempty period (use (0) for a finite expansion)");
  }
}

RenyiExpansion RenyiExpansion::parse(std::string_view text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      text.find('(', open + 1) != std::string_view::npos ||
      text.find(')', close + 1) != std::string_view::npos) {
    throw InvalidInput("malformed Renyi expansion \"" + std::string(text) +
                       "\": expected \"t1 ... tm (tm+1 ... tm+p)\"");
  }
  auto tail = text.substr(close + 1);
  if (std::any_of(tail.begin(), tail.end(),
                  [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
    throw InvalidInput("malformed Renyi expansion \"" + std::string(text) +
                       "\": trailing characters after the period");
  }
  auto pre = parse_digits(text.substr(0, open), text);
  auto per = parse_digits(text.substr(open + 1, close - open - 1), text);
  if (pre.empty() && per.empty()) {
    throw InvalidInput("empty Renyi expansion");
  }
  return RenyiExpansion(std::move(pre), std::move(per));
}

RenyiExpansion RenyiExpansion::from_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    return RenyiExpansion(j.at("preperiod").get<std::vector<Digit>>(),
                          j.at("period").get<std::vector<Digit>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed Renyi expansion JSON: ") + e.what());
  }
}

Digit RenyiExpansion::digit(std::size_t i) const {
  if (i == 0) throw InvalidInput("Renyi digits are indexed from 1");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - 1 - preperiod_.size()) % period_.size()];
}

bool RenyiExpansion::is_simple() const noexcept {
  return period_.size() == 1 && period_[0] == 0;
}

bool RenyiExpansion::is_minimal() const { return minimized() == *this; }

RenyiExpansion RenyiExpansion::minimized() const {
  std::vector<Digit> pre = preperiod_;
  std::vector<Digit> per(period_.begin(),
                         period_.begin() + static_cast<std::ptrdiff_t>(primitive_period(period_)));
  // Fold trailing preperiod digits into the period by rotation.
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  return RenyiExpansion(std::move(pre), std::move(per));
}

std::string RenyiExpansion::to_string() const {
  std::ostringstream os;
  for (Digit t : preperiod_) os << t << ' ';
  os << '(';
  for (std::size_t i = 0; i < period_.size(); ++i) os << (i ? " " : "") << period_[i];
  os << ')';
  return os.str();
}

std::string RenyiExpansion::to_json() const {
  nlohmann::json j;
  j["preperiod"] = preperiod_;
  j["period"] = period_;
  return j.dump();
}

ParryCheck parry_check(std::span<const Digit> preperiod, std::span<const Digit> period) {
  if (preperiod.empty() && period.empty()) throw InvalidInput("empty digit sequence");
  if (period.empty()) throw InvalidInput("period length must be at least 1");

  const std::size_t m = preperiod.size();
  const std::size_t p = period.size();
  auto t = [&](std::size_t i) {  // 1-based
    return i <= m ? preperiod[i - 1] : period[(i - 1 - m) % p];
  };
  const std::size_t window = m + 2 * p;
  // Shifts j > m + p + 1 repeat earlier ones; j = m + p + 1 matters when m = 0.
  for (std::size_t j = 2; j <= m + p + 1; ++j) {
    bool smaller = false;
    for (std::size_t i = 0; i < window; ++i) {
      Digit lhs = t(j + i);
      Digit rhs = t(1 + i);
      if (lhs < rhs) {
        smaller = true;
        break;
      }
      if (lhs > rhs) break;
    }
    if (!smaller) return ParryCheck{false, j};
  }
  return ParryCheck{true, std::nullopt};
}

ParryCheck parry_check(const RenyiExpansion& expansion) {
  return parry_check(expansion.preperiod(), expansion.period());
}

}  // namespace parry
