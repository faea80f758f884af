// Exception types thrown across the library. Each maps to one failure
// condition so callers can catch precisely.
#pragma once

#include <stdexcept>
#include <string>

namespace dirdepth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnitNorm : public Error {
 public:
  using Error::Error;
};

class AngleOutOfRange : public Error {
 public:
  using Error::Error;
};

class LatitudeOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  using Error::Error;
};

class DeltaOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyNeighborhood : public Error {
 public:
  using Error::Error;
};

class NotCircular : public Error {
 public:
  using Error::Error;
};

class KappaNotPositive : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidOptions : public Error {
 public:
  using Error::Error;
};

class MalformedRow : public Error {
 public:
  using Error::Error;
};

class InconsistentDimension : public Error {
 public:
  using Error::Error;
};

// Catch-all for argument values that violate a precondition not covered by
// a more specific type above.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirdepth
