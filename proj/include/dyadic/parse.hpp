#pragma once

#include <string_view>
#include <vector>

#include "dyadic/field.hpp"

namespace dyadic {

// Element literals: integers, pi, Delta, rho, sqrt(r) for rationals r,
// combined with + - * / and ^ (integer exponents).
Elem parse_elem(const Field& field, std::string_view text);

// Comma-separated list; commas inside parentheses do not split.
std::vector<Elem> parse_elem_list(const Field& field, std::string_view text);

}  // namespace dyadic
