#pragma once

// Exact arithmetic used throughout the library.  Everything that touches a
// stability parameter or a feasibility certificate is computed over the
// rationals; no floating point enters any verdict.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "qv/error.hpp"

namespace qv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rat parse_rational(const std::string& text);

// Renders as "p" or "p/q" in lowest terms (denominator suppressed when 1).
std::string format_rational(const Rat& value);

// Scales a rational vector to the unique primitive integer vector pointing the
// same way: multiply by the lcm of denominators, divide by the gcd of entries.
// The zero vector is returned unchanged.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const std::vector<Int>& v);

}  // namespace qv
