#pragma once

#include <string_view>

#include "qaff/rational_function.hpp"

namespace qaff {

// Grammar: sums, products, integer powers, parentheses, rational literals and
// variables a_i, t_i (alias of a_i), g_i, q_i, x_i, ehat_i, e_i, alpha_i.
// Indices may be written a_12 or a_{-1}.
Polynomial parse_polynomial(std::string_view text);
RationalFunction parse_rational_function(std::string_view text);

}  // namespace qaff
