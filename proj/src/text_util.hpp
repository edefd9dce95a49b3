#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsys/parse_error.hpp"

namespace qsys::detail {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Splits text into whitespace-separated tokens per line, dropping blank
// lines and lines whose first non-blank character is '#'.
std::vector<Line> tokenize(std::string_view text);

// Strict decimal integer; accepts a leading '+' or '-' only when allowed.
int parse_int(const Token& token, int line, bool allow_sign = false);

// Parses "key=value" and checks the key.
std::string_view key_value(const Token& token, int line, std::string_view key);

// Comma-separated integer list such as "0,2,1".
std::vector<int> parse_int_list(std::string_view text, const Token& token,
                                int line);

// Sequential access to tokenized lines with error helpers.
class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const;
  const Line& next();
  int last_line() const;

  // Reads `rows` lines of exactly `cols` integers in [0, bound).
  std::vector<int> read_matrix(int rows, int cols, int bound);

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace qsys::detail
