// Polynomial expression parsing and canonical serialization. Grammar:
// sums/differences of products of powers; '^' with nonnegative integer
// exponents; rational literals p/q; parentheses; multiplication always
// explicit. Exactly two variables.

#pragma once

#include <string>

#include "bpoly.hpp"

namespace polyfib {

// Throws InputError with the character position on bad input.
BPoly parse_polynomial(const std::string& text, const std::string& vx = "x",
                       const std::string& vy = "y");

// Canonical form; parsing it back yields an identical polynomial.
std::string poly_to_string(const BPoly& f, const std::string& vx = "x",
                           const std::string& vy = "y");

}  // namespace polyfib
