#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ripskit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, presentations, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An engine refused because its input exceeds the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Dehn's algorithm was asked to run on a presentation that is not C'(1/6).
class NotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace ripskit
