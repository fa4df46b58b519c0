#pragma once

#include <stdexcept>
#include <string>

namespace polyslice {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (r <= 0, alpha <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible length were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A square system has no unique solution.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// The halfspace system does not describe a bounded set.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// The polytope is empty or has empty interior.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The kernel of the active functionals is trivial, so no certificate direction exists.
class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace polyslice
