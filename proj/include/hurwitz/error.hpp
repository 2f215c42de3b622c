#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed parameters, literals or tables.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition
/// (empty set, zero polynomial where a degree is needed, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but exceeds a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
