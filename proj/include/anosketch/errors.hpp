#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anosketch {

/// An edge arrived with a timestamp older than the stream head.
class StreamOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input line; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Positionally-aligned sequences have different lengths.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// AUC is undefined when only one label class is present.
class DegenerateLabelsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Density or likelihood evaluated over an empty cell set.
class UndefinedDensityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix too large for exhaustive enumeration.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace anosketch
