#pragma once

#include <stdexcept>
#include <string>

namespace qsk {

// Domain errors: bad user input, mismatched alphabets, out-of-range shapes.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariants (non-integral solve, failed exact division on a
// guaranteed-divisible input, ...). Reaching one of these is a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qsk
