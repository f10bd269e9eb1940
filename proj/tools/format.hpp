#pragma once

#include <gmpxx.h>

#include <string>

namespace parry::cli {

/// Positional decimal rendering with at most `significant` digits, trailing
/// zeros dropped: 3, 0.5, 3.41421356237.
std::string decimal(const mpf_class& x, unsigned significant);

}  // namespace parry::cli
