#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieamk {

/// Malformed user input: files, flags, group tables, action matrices.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated preconditions.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency re-check failed. Indicates a bug, not bad input.
class InternalCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product or module action would leave the configured truncation window.
/// Carries the degree that would have been needed.
class TruncationOverflow : public std::runtime_error {
 public:
  TruncationOverflow(std::size_t needed, std::size_t bound)
      : std::runtime_error("truncation overflow: result has degree " + std::to_string(needed) +
                           ", bound is " + std::to_string(bound)),
        needed_degree(needed),
        degree_bound(bound) {}

  std::size_t needed_degree;
  std::size_t degree_bound;
};

}  // namespace lieamk
