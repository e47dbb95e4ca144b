#pragma once

#include <stdexcept>
#include <string>

namespace sortlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (n = 0, a < 2, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A user-supplied increment sequence breaks one of the sequence rules.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A pass trace cannot have been produced by any Shellsort run.
class CorruptTrace : public Error {
 public:
  using Error::Error;
};

/// A stack/queue move that the machine cannot execute.
class IllegalMove : public Error {
 public:
  IllegalMove(std::size_t step, const std::string& what)
      : Error("illegal move at step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// An exhaustive search or experiment would exceed its resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An experiment description is malformed or out of range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sortlab
