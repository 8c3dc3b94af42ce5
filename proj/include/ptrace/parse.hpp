#pragma once

#include <string_view>
#include <vector>

#include "ptrace/poly.hpp"

namespace ptrace {

/// Parses `x^3 + 2*y*z - 1/2`, `(x+y)^2`, `3x y` (the `*` is optional).
///
/// Identifiers must name ring variables; when `cyclotomic_order` > 1 the
/// identifier `zeta` (unless shadowed by a variable) denotes a primitive root
/// of unity and may carry negative exponents. Division is only by nonzero
/// constants. Failures throw ParseError naming the offending token.
Poly parse_poly(std::string_view text, const RingPtr& ring, int cyclotomic_order = 1);

/// Parses a constant expression such as `-3/4` or `zeta^2 + 1`.
Scalar parse_scalar(std::string_view text, int cyclotomic_order = 1);

/// Splits on top-level commas (outside parentheses).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace ptrace
