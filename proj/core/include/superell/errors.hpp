#pragma once

#include <stdexcept>
#include <string>

namespace superell {

/// Bad input or violated precondition (invalid model, q not 1 mod ell, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guard refused the request (CLI exit code 3).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed at runtime (CLI exit code 2). The message
/// names the invariant.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::logic_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace superell
