#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parry::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kPrecision = 3,
  kVerification = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parry::cli
