#pragma once

#include <stdexcept>
#include <string>

namespace vartraj {

// Base class for everything this library throws on bad input or
// domain violations. Callers that only want "did it work" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Rotation logarithm requested at (or numerically near) angle pi.
class AmbiguousLogarithmError : public Error {
 public:
  using Error::Error;
};

// Colinear / antipodal vector pair, or coincident endpoints.
class DegeneratePairError : public Error {
 public:
  using Error::Error;
};

class InvalidDensityError : public Error {
 public:
  using Error::Error;
};

class DegeneratePathError : public Error {
 public:
  using Error::Error;
};

class InvalidCurveError : public Error {
 public:
  using Error::Error;
};

// Curvature below threshold: the Frenet normal is not defined.
class UndefinedNormalError : public Error {
 public:
  using Error::Error;
};

class InvalidCouplingError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

class InvalidMetricError : public Error {
 public:
  using Error::Error;
};

class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

// Boundary-matched exponential ansatz divides by x2(1) - x2(0).
class DegenerateAnsatzError : public Error {
 public:
  using Error::Error;
};

// Malformed input files / CLI configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vartraj
