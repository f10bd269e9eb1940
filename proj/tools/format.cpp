#include "format.hpp"

namespace parry::cli {

std::string decimal(const mpf_class& x, unsigned significant) {
  mp_exp_t exp = 0;
  std::string digits = x.get_str(exp, 10, significant);
  if (digits.empty()) return "0";
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  } else if (static_cast<std::size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exp)) + "." +
          digits.substr(static_cast<std::size_t>(exp));
  }
  return sign + out;
}

}  // namespace parry::cli
