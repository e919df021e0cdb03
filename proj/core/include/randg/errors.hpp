#pragma once

#include <stdexcept>
#include <string>

namespace randg {

/// Raised on malformed configuration input; carries the offending line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line = 0)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when a time step cannot be completed (solver breakdown, NaN state).
/// Carries the last time at which the state was still valid.
class SolverError : public std::runtime_error {
 public:
  SolverError(std::string message, double last_good_time)
      : std::runtime_error(std::move(message)), last_good_time_(last_good_time) {}
  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace randg
