#pragma once

#include <stdexcept>
#include <string>

namespace weavekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic
class NonDivisible : public Error { using Error::Error; };
class NonIntegerValue : public Error { using Error::Error; };

// Argument outside the range where a formula or operation is defined.
class RangeError : public Error { using Error::Error; };

// Internal consistency failures. These indicate bugs, not bad input.
class RecursionInvariantViolated : public Error { using Error::Error; };
class OracleBasisError : public Error { using Error::Error; };
class StateSumParityError : public Error { using Error::Error; };
class ChangeOfVariablesError : public Error { using Error::Error; };
class InvariantViolation : public Error { using Error::Error; };

// Input was not a Jones polynomial / signature pair of an alternating knot.
class NegativeCoefficient : public Error { using Error::Error; };

class DegenerateFit : public Error { using Error::Error; };

// File input
class ParseError : public Error { using Error::Error; };
class MissingData : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

}  // namespace weavekit
