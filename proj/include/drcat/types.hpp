#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace drcat {

// Elements of every finite structure are dense indices 0..n-1.
using element = std::uint32_t;

// Sentinel for missing entries in partial composition tables.
inline constexpr element UNDEFINED = std::numeric_limits<element>::max();

// An operation was called on data that violates its documented
// precondition (e.g. an ample check on a structure that already fails the
// DR axioms).  Callers that want a report instead of an exception should
// use the check_* functions, which gate and return a precondition-failed
// CheckReport.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(std::string const& what)
      : std::runtime_error(what) {}
};

// A materialization or enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::string const& what) : std::runtime_error(what) {}
};

// Text input was rejected; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column "
                           + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace drcat
