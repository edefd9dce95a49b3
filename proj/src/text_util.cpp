#include "text_util.hpp"

#include <charconv>

namespace qsys::detail {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r'))
        ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' &&
             raw[j] != '\r')
        ++j;
      line.tokens.push_back(
          {std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_int(const Token& token, int line, bool allow_sign) {
  std::string_view s = token.text;
  bool negative = false;
  if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, token.column,
                     "expected an integer, got '" + token.text + "'");
  return negative ? -value : value;
}

std::string_view key_value(const Token& token, int line, std::string_view key) {
  std::string_view s = token.text;
  if (s.size() <= key.size() || s.substr(0, key.size()) != key ||
      s[key.size()] != '=')
    throw ParseError(line, token.column,
                     "expected '" + std::string(key) + "=...', got '" +
                         token.text + "'");
  return s.substr(key.size() + 1);
}

std::vector<int> parse_int_list(std::string_view text, const Token& token,
                                int line) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    Token part{std::string(text.substr(start, end - start)), token.column};
    out.push_back(parse_int(part, line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

const Line& Cursor::peek() const {
  if (done()) throw ParseError(last_line() + 1, 0, "unexpected end of input");
  return lines_[pos_];
}

const Line& Cursor::next() {
  const Line& line = peek();
  ++pos_;
  return line;
}

int Cursor::last_line() const {
  return lines_.empty() ? 0 : lines_.back().number;
}

std::vector<int> Cursor::read_matrix(int rows, int cols, int bound) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    const Line& line = next();
    if (static_cast<int>(line.tokens.size()) != cols) {
      const int column = static_cast<int>(line.tokens.size()) > cols
                             ? line.tokens[cols].column
                             : 0;
      throw ParseError(line.number, column,
                       "expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(line.tokens.size()));
    }
    for (const Token& token : line.tokens) {
      const int v = parse_int(token, line.number);
      if (v < 0 || v >= bound)
        throw ParseError(line.number, token.column,
                         "entry " + token.text + " out of range [0, " +
                             std::to_string(bound) + ")");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace qsys::detail
