#pragma once

#include "liecas/ratfunc.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace liecas {

// Parses an expression over the identifiers in `vars`:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" nonneg-int)?
//   base   := integer | identifier | "(" expr ")" | "-" base
// Errors carry the 1-based column of the offending character.
RatFunc parse_scalar(std::string_view text, const std::vector<std::string>& vars);

bool is_identifier(std::string_view s);
bool is_reserved_identifier(std::string_view s);

}  // namespace liecas
