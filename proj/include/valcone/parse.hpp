#pragma once

#include <string>

#include "valcone/config.hpp"
#include "valcone/field.hpp"
#include "valcone/germ.hpp"

namespace valcone {

// Configuration document, e.g. {"m": 3, "s": 2, "points": ["F", {"S": 1}]}.
// points lists p_2, ..., p_m; p_1 is always the origin. Schema violations
// raise ParseError, structural violations the validation taxonomy.
Configuration parse_configuration(const std::string& text);
std::string emit_configuration(const Configuration& config);

// Sparse monomial lists with exact integer or rational coefficients, e.g.
// "x^2*y - 3/2*x + 4". var0 and var1 name the two variables.
GermPoly parse_polynomial(const std::string& text, char var0, char var1, const Field& k);
std::string emit_polynomial(const GermPoly& f, char var0, char var1);

}  // namespace valcone
