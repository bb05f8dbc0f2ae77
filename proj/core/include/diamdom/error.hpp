#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace diamdom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument broke a documented precondition (bad vertex id, non-maximal stable set, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The input graph is outside the class an algorithm was asked to handle.
class ClassMismatch : public Error {
 public:
  using Error::Error;
};

/// A size guard, enumeration cap or search budget was exhausted.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::size_t count,
                std::optional<std::size_t> best_bound = std::nullopt)
      : Error(what), count_(count), best_bound_(best_bound) {}
  /// Items processed (sets emitted, nodes expanded, vertices) when the guard fired.
  std::size_t count() const noexcept { return count_; }
  /// Best feasible objective found before aborting, when the search had one.
  std::optional<std::size_t> best_bound() const noexcept { return best_bound_; }

 private:
  std::size_t count_;
  std::optional<std::size_t> best_bound_;
};

/// A pattern exceeds the induced-search vertex cap.
class UnsupportedPattern : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug or a counterexample to a proven claim.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace diamdom
