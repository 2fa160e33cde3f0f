#pragma once

#include <stdexcept>
#include <string>

namespace relaysec {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (bad axis index, alphabet
/// mismatch, power out of range, ...).
class argument_error : public error {
 public:
  using error::error;
};

/// Numeric-domain failure (indefinite covariance, negative mutual
/// information beyond the rounding clamp, ...).
class numeric_error : public error {
 public:
  using error::error;
};

/// Configuration text could not be parsed; message carries file/line/field.
class parse_error : public error {
 public:
  using error::error;
};

/// Filesystem failure; message carries the offending path.
class io_error : public error {
 public:
  using error::error;
};

/// Covariance parameters describe a matrix that is not positive
/// semidefinite. Carries the offending minimum eigenvalue.
class infeasible_error : public argument_error {
 public:
  infeasible_error(const std::string& what, double min_eigenvalue)
      : argument_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Search-space guard tripped (joint alphabet too large to enumerate).
class capacity_guard_error : public argument_error {
 public:
  using argument_error::argument_error;
};

/// Exit codes used by the command line tool. Distinct per error family.
enum exit_code : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse_error = 2,
  exit_argument_error = 3,
  exit_numeric_error = 4,
  exit_io_error = 5,
};

}  // namespace relaysec
