#pragma once

#include <stdexcept>
#include <string>

namespace qsys {

// Raised by every text parser in the library. Line and column are 1-based
// and point at the offending token (column 0 when the problem is a missing
// line or the end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qsys
