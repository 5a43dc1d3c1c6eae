#pragma once

#include <stdexcept>
#include <string>

namespace multitime {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |u| >= c, or a negative group speed.
class InvalidVelocity : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed-form model.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Wave with zero wave number.
class DegenerateWave : public Error {
 public:
  using Error::Error;
};

/// Lattice requested for a particle at rest.
class DegenerateLattice : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or missing parameters.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the given particle class.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Metric not invertible at a probe point.
class SingularMetric : public Error {
 public:
  SingularMetric(const std::string& what, double condition_number)
      : Error(what), condition_number_(condition_number) {}
  double condition_number() const noexcept { return condition_number_; }

 private:
  double condition_number_;
};

/// Stencil would straddle the 1/r singularity.
class SingularityProximity : public Error {
 public:
  using Error::Error;
};

/// Occupancy cell cannot hold a single fermion world-line set.
class CellTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace multitime
