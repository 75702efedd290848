#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcs {

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedLine,
  kVertexOutOfRange,
  kMissingColor,
  kDuplicateColor,
  kDuplicateEdge,
  kSelfLoop,
  kColorOutOfRange,
  kCountMismatch,
  kNotIncreasing,
};

const char* to_string(ParseErrorKind kind);

// Raised by every text-format reader. `line()` is 1-based. Errors that are only
// detectable at end of input (a missing color line, too few edges) name the
// last line of the file.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// A documented precondition of a solver or checker does not hold
// (disconnected input, not a tree, enumeration cap exceeded, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mcs
