#pragma once

#include <stdexcept>

namespace subcrank {

/// Invalid argument or misconfigured input. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spatial datum whose geometry does not line up with the mesh
/// (2D box indicator on a grid not divisible by 4).
class AlignmentError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Pointwise evaluation of a time profile where it is unbounded (t = 0, mu < 0).
class SingularityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Complex power evaluated on the principal branch cut.
class DomainError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Numerical breakdown (non-SPD factorization, divergent iteration).
/// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File I/O failure while emitting reports.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subcrank
