#pragma once

#include <stdexcept>
#include <string>

namespace symrank {

// Base of every exception thrown by the library. Callers that only care
// about "something was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Arithmetic between elements of Q(sqrt d1) and Q(sqrt d2) with d1 != d2.
class IncompatibleField : public Error {
 public:
  using Error::Error;
};

class NoRealRoot : public Error {
 public:
  using Error::Error;
};

// f(alpha, beta) == f(beta, alpha): the two-valued ensemble has one member.
class DegenerateEnsemble : public Error {
 public:
  using Error::Error;
};

// A matrix entry that is neither of the two admissible values.
class NotInEnsemble : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symrank
