#pragma once

#include <string>
#include <vector>

#include "parry/complexity.hpp"
#include "parry/palindromes.hpp"

namespace parry {

// JSON documents carry "schema": 1. Lengths that may exceed 64 bits are
// written as decimal strings.

std::string to_csv(const ComplexityTable& table);
std::string to_json(const ComplexityTable& table);

std::string to_csv(const PalindromeTable& table);
std::string to_json(const PalindromeTable& table);

std::string to_csv(const UVTower& tower);
std::string to_json(const UVTower& tower);

std::string to_json(const IdentityReport& report);
std::string to_json(const SpecialFactorReport& report);
std::string to_json(const ReversalReport& report);
std::string to_json(const TowerCenterReport& report);
std::string to_json(const QuadraticParams& params, const std::vector<BranchSpec>& branches);

}  // namespace parry
