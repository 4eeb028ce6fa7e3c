#pragma once

#include <stdexcept>
#include <string>

namespace wflag {

// Bad user input: non-dominant weights, non-integral or non-positive
// variety weights, unknown ids, malformed equation data.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was exceeded (Weyl closure size, reduction steps).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed (nonzero remainder in an exact division,
// inconsistent bookkeeping). Always a bug, never a usage problem.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace wflag
