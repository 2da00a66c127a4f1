#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace homcolor {

/// Exact scalar field. All coefficients in the engine are reduced fractions.
using Rational = mpq_class;

/// Parses "p", "-p", "+p" or "p/q" exactly. Anything else (decimals, exponents,
/// zero denominators, whitespace) throws StructuralError.
Rational parse_rational(std::string_view text);

/// Canonical form: "-3/2", "4", "0".
std::string to_string(const Rational& value);

}  // namespace homcolor
