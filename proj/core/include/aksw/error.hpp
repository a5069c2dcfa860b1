#pragma once

#include <stdexcept>
#include <string>

namespace aksw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when a specialization makes a denominator (or a required pivot)
/// vanish. The message names the offending polynomial.
class VanishingDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A Verma weight space below the configured depth was requested.
class TruncationEscape : public Error {
 public:
  using Error::Error;
};

/// Two eigenvalues (or tableau contents) that must differ coincide.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace aksw
