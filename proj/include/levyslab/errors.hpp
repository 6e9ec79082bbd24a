#pragma once

#include <stdexcept>
#include <string>

namespace levyslab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Grid that violates the periodic FFT grid invariants.
class GridError : public Error {
 public:
  using Error::Error;
};

/// Neither member of a degenerate pair vanishes at the walls.
class SelectionError : public Error {
 public:
  using Error::Error;
};

/// Residual requested for an identically zero function.
class ZeroFunction : public Error {
 public:
  using Error::Error;
};

/// Initial condition with an even part the odd sine basis cannot represent.
class ParityError : public Error {
 public:
  ParityError(const std::string& what, double even_part)
      : Error(what), even_part_(even_part) {}

  /// Max-norm of the even part (u(r) + u(-r)) / 2 that was measured.
  double even_part() const noexcept { return even_part_; }

 private:
  double even_part_;
};

}  // namespace levyslab
