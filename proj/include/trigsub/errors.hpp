#pragma once

#include <stdexcept>
#include <string>

namespace trigsub {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMesh : public Error {
 public:
  using Error::Error;
};

class InvalidTension : public Error {
 public:
  using Error::Error;
};

class MeshTooLarge : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DegenerateMask : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Thrown when a symbol is not divisible by the smoothing factor; carries the
/// magnitude of the division remainder.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(double residual)
      : Error("symbol is not divisible by (1+z)/2, residual " +
              std::to_string(residual)),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace trigsub
