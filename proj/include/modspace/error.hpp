#pragma once

#include <stdexcept>
#include <string>

namespace modspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: non-finite samples, invalid exponents, zero windows.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not live on the same grid or domain.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A cost gate or a domain/resolution budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace modspace
