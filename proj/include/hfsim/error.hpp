#pragma once

#include <stdexcept>
#include <string>

namespace hfsim {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class EmptyElement : public Error {
public:
  EmptyElement() : Error("hesitant element must contain at least one grade") {}
};

class OutOfRange : public Error {
public:
  explicit OutOfRange(double value)
      : Error("membership grade " + std::to_string(value) + " outside [0,1]"), value_(value) {}
  double value() const noexcept { return value_; }

private:
  double value_;
};

class UniverseMismatch : public Error {
public:
  using Error::Error;
};

class InvalidSpec : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

class WeightNotNormalized : public Error {
public:
  using Error::Error;
};

class InvalidProblem : public Error {
public:
  using Error::Error;
};

class DegenerateScores : public Error {
public:
  using Error::Error;
};

/// Malformed input document; the message carries the line/field location.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed document that violates a domain invariant. `invariant()` names it
/// ("OutOfRange", "WeightSum", ...).
class ValidationError : public Error {
public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

private:
  std::string invariant_;
};

}  // namespace hfsim
