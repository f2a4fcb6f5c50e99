#pragma once

#include <stdexcept>
#include <string>

namespace catmon {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an interface contract: mismatched rings, mismatched
/// degrees or ambient sizes, malformed input syntax.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A value fails the defining conditions of its domain: an image
/// sequence that is not order-preserving, a pair (X, Y) without X <= Y.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds a configured enumeration bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace catmon
