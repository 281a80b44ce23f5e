#pragma once

#include <stdexcept>
#include <string>

namespace nwave {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A denominator exponential polynomial vanished identically.
class DivisionByZeroField : public Error {
public:
  using Error::Error;
};

/// Numeric evaluation hit a denominator below the pole threshold.
class EvalPole : public Error {
public:
  using Error::Error;
};

class InvalidSpectralData : public Error {
public:
  using Error::Error;
};

/// The denominator tau function of a ratio formula is identically zero,
/// i.e. the requested orders lie beyond the interruption of the chain.
class TauZero : public Error {
public:
  using Error::Error;
};

/// Malformed or schema-violating input document.
class InputError : public Error {
public:
  using Error::Error;
};

/// A transformation or determinant ratio needs to divide by a field that is
/// identically zero.
class PivotZero : public Error {
public:
  PivotZero(const std::string& what, std::string field)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

}  // namespace nwave
