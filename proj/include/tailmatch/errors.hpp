#pragma once

#include <stdexcept>
#include <string>

namespace tailmatch {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input: rationals, hypergraph files, distribution JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// f(lo) and f(hi) do not have strictly opposite signs.
class BracketError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An enumeration would exceed its configured cap.
class SizeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A mathematical identity that must hold exactly did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tailmatch
