#pragma once

#include <stdexcept>
#include <string>

namespace xyv {

/// Malformed input file (JSON syntax or schema). Carries the 1-based line
/// of the offending token when it is known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive enumeration or simulation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input is larger than an exhaustive algorithm supports.
class SizeCapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A party in a protocol answered with a message of the wrong shape.
class ProtocolError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xyv
