#pragma once

#include <stdexcept>

namespace wzw {

// Input fails the divisibility hypothesis: Sigma.C must be even for the
// twist degree (and hence the determinant degree) to be integral.
class parity_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input lies outside the stability window c > max(-e/4, 0).
class stability_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computation routes disagreed. Always a bug in the
// library, never a property of the input.
class oracle_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wzw
