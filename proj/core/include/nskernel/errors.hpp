#pragma once

#include <stdexcept>
#include <string>

namespace nskernel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input lies outside the domain (or its closure) where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The requested geometric object is not uniquely determined.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

// Quadrature, factorization or iteration failed to meet its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace nskernel

namespace nskernel {

// Levi form not positive definite on the complex tangent space.
class NotStronglyPseudoconvex : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace nskernel
