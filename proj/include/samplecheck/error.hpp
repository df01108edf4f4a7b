#pragma once

#include <stdexcept>
#include <string>

namespace samplecheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS or weight-file input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A value violates a documented precondition or type invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the support cap or the result limit.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// The formula has no models where at least one is required.
class Unsatisfiable : public Error {
 public:
  using Error::Error;
};

/// An external sampler produced output that breaks the line protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// An external sampler could not be run, timed out, or exited non-zero.
class ProcessError : public Error {
 public:
  using Error::Error;
};

}  // namespace samplecheck
