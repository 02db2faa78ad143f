#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or census would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A certification step (isomorphism, locality of End) could not be decided
/// within the configured limits.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// A mathematical check that is expected to hold did not.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace hallforge
