#pragma once

#include <stdexcept>
#include <string>

namespace stratmod {

// Base of every error raised by the library. kind() is a stable machine
// readable tag; the CLI forwards it verbatim in its error object.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "error"; }
};

class RankMismatch : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "rank_mismatch"; }
};

// Argument outside the documented domain (negative part, index out of range,
// non-decreasing tuple, ...).
class DomainError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "domain_error"; }
};

// Concatenation would produce a tuple that is not weakly decreasing.
class MonotonicityError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "monotonicity"; }
};

// A Pochhammer factor in a reciprocal product is zero.
class DegenerateParameter : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "degenerate_parameter"; }
};

class ConvergenceError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "non_convergence"; }
};

// Vanishing order of the zero polynomial.
class UndefinedOrder : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "undefined_order"; }
};

class OverflowError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "overflow"; }
};

} // namespace stratmod
