#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centra {

// Raised when an operation would exceed a configured cap (element
// enumeration, quotient index, lattice size, exact chain-length search, ...).
// Callers that treat caps as soft limits (the verification suites) catch this
// and mark the check as skipped instead of failed.
class CapError : public std::runtime_error {
public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text-format parsers; carries a 1-based line number where
// that makes sense (0 for single-line inputs).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  size_t line() const { return line_; }

private:
  size_t line_;
};

}  // namespace centra
