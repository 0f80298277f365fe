#pragma once

#include <stdexcept>
#include <string>

namespace otto {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// The cycle is not running in the operating mode an operation requires.
class ModeError : public Error {
 public:
  ModeError(const std::string& message, std::string actual_mode)
      : Error(message), actual_mode_(std::move(actual_mode)) {}
  const char* kind() const noexcept override { return "mode"; }
  const std::string& actual_mode() const noexcept { return actual_mode_; }

 private:
  std::string actual_mode_;
};

class SingularityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "singularity"; }
};

// Requested efficiency lies above the attainable maximum.
class NoSolutionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "no_solution"; }
};

// Refrigerator parameters outside the cooling window.
class InfeasibleError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "infeasible"; }
};

class BracketError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "bracket"; }
};

// An objective returned NaN or infinity during a search.
class EvaluationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "evaluation"; }
};

}  // namespace otto
