#pragma once

// Exact arithmetic used everywhere in the library: arbitrary-precision
// integers and rationals. No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wzw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact halving of a value known to be even (adjunction, Riemann-Roch,
// twist degrees). An odd input is a caller bug, not a rounding situation.
inline Int half_exact(const Int& value, const char* what) {
  if (value % 2 != 0) {
    throw std::logic_error(std::string(what) + ": value " + value.str() + " is odd");
  }
  return value / 2;
}

}  // namespace wzw
