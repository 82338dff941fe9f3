#pragma once

#include <stdexcept>
#include <string>

namespace iongate {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownSpeciesError : Error {
  using Error::Error;
};

/// A formula was evaluated outside the parameter regime it is valid in.
struct RegimeError : Error {
  using Error::Error;
};

struct DegenerateOverlapError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, double achieved)
      : Error(msg), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

struct ResourceLimitError : Error {
  using Error::Error;
};

struct StructureError : Error {
  using Error::Error;
};

struct ScheduleError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace iongate
