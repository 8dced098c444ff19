#pragma once

#include <stdexcept>
#include <string>

namespace lietame {

// Error taxonomy shared by every module. The CLI maps these to exit codes:
// input/structural -> 2, consistency -> 3, resource -> 4.

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input (unknown type label, bad partition, ...).
struct input_error : error {
  using error::error;
};

// Values that cannot be combined (variable-list mismatch, size mismatch).
struct structural_error : error {
  using error::error;
};

// An exact identity that must hold failed; signals a bug or a non-invariant input.
struct consistency_error : error {
  using error::error;
};

// A guard against super-polynomial blowup rejected the request.
struct resource_error : error {
  using error::error;
};

} // namespace lietame
