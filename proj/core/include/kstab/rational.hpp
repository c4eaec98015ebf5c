#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace kstab {

// Every quantity in the library is an exact arbitrary-precision rational.
// No floating point enters except in the quadrature oracle, which exists
// precisely to cross-check the exact path.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Parses "p/q" or a plain integer string (optional sign). Rejects anything
// else, in particular decimal or exponent notation. Throws invalid_input.
Rat parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rat& value);

double to_double(const Rat& value);

}  // namespace kstab
