#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace itop {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Parses a decimal literal ("1", "-0.25", "3e-2") into an exact rational.
// Throws std::invalid_argument on anything else.
Rat rat_from_decimal(const std::string& text);

// Canonical rendering: "n" for integers, "n/d" otherwise (d > 0, reduced).
std::string rat_to_string(const Rat& value);

}  // namespace itop
