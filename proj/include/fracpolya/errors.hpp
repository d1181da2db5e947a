#pragma once

#include <stdexcept>
#include <string>

namespace fracpolya {

// Argument outside the domain of a formula (x <= 0 for log_gamma, n < 4 for
// the linear interval bound, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed caller input: asymmetric matrix, non-unit vector, bad grid.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iteration budget exhausted or a non-finite value appeared.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed form produced a value that can only come from a transcription bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QuadratureConvergenceError : public NumericError {
 public:
  QuadratureConvergenceError(const std::string& what, double previous,
                             double last)
      : NumericError(what), previous_(previous), last_(last) {}

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

class BracketingError : public NumericError {
 public:
  using NumericError::NumericError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracpolya
