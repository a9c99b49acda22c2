#pragma once

#include <stdexcept>
#include <string>

namespace omnihex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetric : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised when a rotation, pose, inertia or gain fails its invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Generator set does not span R^3 (e.g. the untilted hexarotor).
class DegenerateDesign : public Error {
 public:
  using Error::Error;
};

class SingularAllocation : public Error {
 public:
  SingularAllocation(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class NonFiniteState : public Error {
 public:
  NonFiniteState(const std::string& what, double time)
      : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Configuration parse or validation failure. path() names the offending
/// field, e.g. "vehicle.mass".
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace omnihex
