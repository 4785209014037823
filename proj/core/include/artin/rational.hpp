#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace artin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p` or `p/q` (q > 0) into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

}  // namespace artin
