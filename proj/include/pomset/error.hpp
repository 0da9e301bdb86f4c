#pragma once

#include <stdexcept>
#include <string>

namespace pomset {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operands disagree on ground size, height, length or modulus.
class ShapeError : public Error {
  public:
    using Error::Error;
};

// Well-shaped but semantically invalid input (cyclic relation, non-ideal, ...).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class UndefinedDistance : public Error {
  public:
    using Error::Error;
};

class PartitionImpossible : public Error {
  public:
    using Error::Error;
};

class Unsupported : public Error {
  public:
    using Error::Error;
};

// A proven inequality or identity failed at runtime.
class InternalInconsistency : public Error {
  public:
    using Error::Error;
};

}  // namespace pomset
