#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsqt {

/// Malformed input text. `line()` is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input parsed but contained no edges.
class EmptyGraphError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A scene (or other structured input) violates its consistency rules.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Refusal of work that exceeds a fixed size limit (e.g. exhaustive enumeration).
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsqt
