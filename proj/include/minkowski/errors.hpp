#pragma once

#include <stdexcept>
#include <string>

namespace minkowski {

/// Malformed or out-of-contract input supplied by the caller.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded a configured resource bound (closure cap, search bound).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minkowski
