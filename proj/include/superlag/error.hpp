#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superlag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different charts.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Parity requirement violated: odd/inhomogeneous Lagrangian, parity-changing
/// morphism assignment, inhomogeneous Hamiltonian function.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the supported fragment (e.g. non-affine momenta).
class NotSupported : public Error {
 public:
  using Error::Error;
};

class SingularLagrangian : public Error {
 public:
  using Error::Error;
};

/// A defining identity failed to hold exactly. Always a bug in a sign
/// convention, never a user error.
class InconsistentIdentity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t line, std::size_t column, const std::string& name)
      : ParseError(line, column, "unknown identifier '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace superlag
