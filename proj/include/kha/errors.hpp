#pragma once

#include <stdexcept>
#include <string>

namespace kha {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A symmetrized expression whose denominator did not clear. For shuffle
/// products of genuine symmetric Laurent polynomials this cannot happen, so
/// seeing it there is an internal invariant violation.
class NonPolynomialSymmetrization : public Error {
 public:
  using Error::Error;
};

class GradeMismatch : public Error {
 public:
  using Error::Error;
};

class NegativeDegree : public Error {
 public:
  using Error::Error;
};

class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidComposition : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

}  // namespace kha
