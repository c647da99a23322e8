#pragma once

// Exact arithmetic used throughout the lattice-side library: arbitrary
// precision integers and rationals, so there is no fixed-width overflow
// anywhere in the combinatorial pipeline.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latloc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A weight (lattice vector / momentum). Components are exact integers.
using Weight = std::vector<Int>;

// Integer matrix, row-major: mat[i][j] is row i, column j.
using IMat = std::vector<std::vector<Int>>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor / ceil of a rational as exact integers.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// Parse "p/q" or "p" (optional sign) into an exact rational.
Rat parse_rational(const std::string& text);

// Render: integer when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rat& q);

std::string weight_to_string(const Weight& w);

// Errors thrown by the library. parse_error: malformed input documents or
// option strings (CLI exit 2). domain_error: mathematically invalid requests
// or unresolvable computations on well-formed input (CLI exit 1).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace latloc
