#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ltlnorm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by parse(); `position` is a 0-based offset into the input text.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg), position(pos) {}
  std::size_t position;
};

// apply_rule() received contexts/parts that do not fit the rule's left-hand shape.
struct ShapeError : Error {
  using Error::Error;
};

// abstract_occurrences() found no occurrence of the target in the given scope.
struct TargetNotFoundError : Error {
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured ceiling; `size` is the
// number of lasso words that would have to be enumerated.
struct BoundError : Error {
  BoundError(const std::string& msg, std::uint64_t n) : Error(msg), size(n) {}
  std::uint64_t size;
};

// Parse failure in a corpus file; `line` is 1-based.
struct CorpusError : Error {
  CorpusError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
  int line;
};

// An internal invariant did not hold (a size bound, a stage postcondition, a
// termination metric). Mapped to exit code 3 by the CLI.
struct InvariantError : Error {
  using Error::Error;
};

// A single normalization exceeded its configured wall-clock budget.
struct TimeoutError : Error {
  using Error::Error;
};

}  // namespace ltlnorm
