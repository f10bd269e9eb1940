#pragma once

#include <stdexcept>
#include <string>

namespace parry {

// Malformed input: bad digit strings, words that are not factors, etc.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the admissible range, e.g. (a,b) with b > a-1.
class InvalidParams : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The requested analysis is not defined for this kind of input
// (closed forms on non-quadratic words, simple Parry expansions, ...).
class UnsupportedVariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working precision too low to separate the quantities being compared.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked identity did not hold. `context()` carries a JSON dump of the
// values involved.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, std::string context)
      : std::runtime_error(what), context_(std::move(context)) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace parry
