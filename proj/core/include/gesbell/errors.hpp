#pragma once

#include <stdexcept>
#include <string>

namespace ges {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct format_error : error {
  using error::error;
};

// A precondition on operator sets was violated (non-commuting pair,
// width mismatch, Y where only X/Z are allowed, invalid stabilizer, ...).
struct validation_error : error {
  using error::error;
};

// A cross-check against a closed-form value failed.
struct bound_error : error {
  using error::error;
};

// A configured limit (dense dimension, brute-force size, kernel cap) was hit.
struct resource_error : error {
  using error::error;
};

}  // namespace ges
