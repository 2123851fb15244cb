#pragma once

#include <stdexcept>
#include <string>

namespace kseg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or malformed input: bad JSON, missing keys, unknown flags.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// A configured size bound was exceeded; the message names the bound.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(what) {}
};

/// Well-formed input that violates a semantic precondition.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace kseg
