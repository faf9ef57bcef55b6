#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antialg {

/// Malformed or inconsistent user input (files, literals, unknown names).
/// Carries the 1-based source line when the input came from a file.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A product needed by a computation lies outside the materialized window.
class OutOfWindow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied to an algebra outside its domain, e.g. the
/// adjoint construction on a table that is not a Lie antialgebra.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold on valid input was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace antialg
