#pragma once

#include <stdexcept>
#include <string>

namespace melzak {

// Base of every error raised by the library. The context string names the
// identity or operation the failure happened in; callers higher up the stack
// may attach it after the fact and rethrow the same object.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message)
      : std::runtime_error(message), message_(std::move(message)) {
    Compose();
  }

  const char* what() const noexcept override { return full_.c_str(); }

  const std::string& message() const noexcept { return message_; }
  const std::string& context() const noexcept { return context_; }

  void set_context(std::string context) {
    context_ = std::move(context);
    Compose();
  }

 private:
  void Compose() {
    full_ = context_.empty() ? message_ : context_ + ": " + message_;
  }

  std::string message_;
  std::string context_;
  std::string full_;
};

// A denominator vanished: lambda (or -y) hit one of the poles 0..n, or a
// rational function was evaluated at a root of its denominator.
class PoleError : public Error {
 public:
  PoleError(std::string pole, std::string message)
      : Error(std::move(message)), pole_(std::move(pole)) {}

  // Canonical text of the offending point.
  const std::string& pole() const noexcept { return pole_; }

 private:
  std::string pole_;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DistinctnessError : public Error {
 public:
  using Error::Error;
};

// Division by an exact zero.
class ZeroError : public Error {
 public:
  using Error::Error;
};

// Malformed text input or an argument outside an operation's domain
// (e.g. n = 0 where n must be positive).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An invariant that can only fail through a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace melzak
