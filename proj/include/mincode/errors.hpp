#pragma once

#include <stdexcept>
#include <string>

namespace mincode {

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive routine would exceed its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input (truth tables, spectra, index lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mincode
