#pragma once

#include <stdexcept>
#include <string>

namespace hypower {

// Malformed input text (graph files, eigenpair files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or size cap was exceeded.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergence, certification failure, rounding
// ambiguity.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypower
