#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artin/laurent.hpp"
#include "artin/rings.hpp"

namespace artin {

/// Parses a rational Laurent polynomial expression over the given variables.
/// Grammar: sums and differences of products of factors; a factor is an
/// integer or p/q constant, a variable, or a parenthesized expression,
/// optionally raised to an integer power (negative powers only for
/// monomials). Examples: "1+s*u+(s*u)^2", "c1*x^-1*y^2 - 3/2".
/// Throws ParseError.
LaurentPoly<RationalField> parse_laurent(std::string_view text,
                                         const std::vector<std::string>& vars);

/// Identifiers appearing in an expression, in order of first appearance.
std::vector<std::string> collect_variables(std::string_view text);

}  // namespace artin
