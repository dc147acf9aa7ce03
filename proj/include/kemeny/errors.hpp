#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rankings, assignments or matrices of mismatching size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (a = b, empty subset, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exact routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed or empty input files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A statistic that needs more data than given (e.g. KT over < 2 votes).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// Stored score disagrees with a recomputation, or an oracle was beaten.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Broken internal assumption; should never surface.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A solver produced no usable solution for a block.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace kemeny
