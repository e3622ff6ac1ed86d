#pragma once

#include <stdexcept>
#include <string>

namespace gemkit {

// Base of every error the library throws. The CLI maps the subclasses onto
// exit codes: refusal = 1, malformed input = 2, internal consistency = 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text or structure that is not a valid colored graph / catalogue.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition is not met (disconnected input, color out of
// range, missing simple-connectivity certificate, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A quantity that must be nonnegative or well-formed is not; signals a
// non-gem input (e.g. a negative regular genus).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree do not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gemkit
