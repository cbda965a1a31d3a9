#pragma once

#include <stdexcept>
#include <string>

namespace gbg {

/// Bad input: malformed graph, unknown edge, precondition not met.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (oracle mismatch, broken complex).
/// Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested group-theoretic data cannot be computed by this library,
/// e.g. edge-group monomorphisms for non-trivial edge groups.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbg
