#pragma once

#include <stdexcept>
#include <string>

namespace cosym {

enum class ErrorKind {
  RingMismatch,
  FrameMismatch,
  DegreeError,
  JacobiViolation,
  SingularSystem,
  Precondition,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cosym
