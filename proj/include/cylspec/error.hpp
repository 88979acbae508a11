#pragma once

#include <stdexcept>
#include <string>

namespace cylspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A theorem regime was requested whose preconditions do not hold.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Float product did not land close enough to integers; retry with more bits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold did not (signals an implementation bug).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class DegenerateLabelError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace cylspec
