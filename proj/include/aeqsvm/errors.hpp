#pragma once

#include <stdexcept>

namespace aeqsvm {

// Thrown when a quantity is mathematically undefined or numerically empty
// (e.g. inverting an operator whose retained spectrum is zero). Input and
// contract violations use std::invalid_argument / std::out_of_range.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aeqsvm
