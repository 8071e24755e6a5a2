#pragma once

#include <string>

#include "valcone/config.hpp"

namespace valcone {

// Dual graph of the resolution in DOT format: vertices L~ and E_1..E_m,
// edges between divisors whose strict transforms meet on X. Output is
// deterministic (fixed vertex and edge ordering).
std::string export_dot(const Configuration& config);

}  // namespace valcone
