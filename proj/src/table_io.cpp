#include "qsys/table_io.hpp"

#include <sstream>

#include "text_util.hpp"

namespace qsys {

using detail::Cursor;
using detail::Line;

TableFile parse_table(std::string_view text) {
  Cursor cursor(detail::tokenize(text));
  const Line& header = cursor.next();
  if (header.tokens[0].text != "magma" || header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens[0].column,
                     "expected 'magma <size>'");
  const int size = detail::parse_int(header.tokens[1], header.number);
  if (size <= 0)
    throw ParseError(header.number, header.tokens[1].column,
                     "size must be positive");
  TableFile file{OperationTable(size), std::nullopt};
  if (!cursor.done() && cursor.peek().tokens[0].text == "identity") {
    const Line& line = cursor.next();
    if (line.tokens.size() != 2)
      throw ParseError(line.number, line.tokens[0].column,
                       "expected 'identity <k>'");
    const int id = detail::parse_int(line.tokens[1], line.number);
    if (id < 0 || id >= size)
      throw ParseError(line.number, line.tokens[1].column,
                       "identity out of range");
    file.identity = id;
  }
  file.table = OperationTable(size, cursor.read_matrix(size, size, size));
  if (!cursor.done()) {
    const Line& extra = cursor.next();
    throw ParseError(extra.number, extra.tokens[0].column,
                     "unexpected content after table");
  }
  return file;
}

std::string serialize_table(const TableFile& file) {
  std::ostringstream out;
  const OperationTable& t = file.table;
  out << "magma " << t.size() << '\n';
  if (file.identity) out << "identity " << *file.identity << '\n';
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) out << (j ? " " : "") << t(i, j);
    out << '\n';
  }
  return out.str();
}

std::string serialize_table(const OperationTable& table) {
  return serialize_table(TableFile{table, std::nullopt});
}

GroupTable parse_group(std::string_view text) {
  TableFile file = parse_table(text);
  if (!file.identity)
    throw ParseError(1, 0, "group file needs an 'identity <k>' line");
  try {
    return GroupTable(std::move(file.table), *file.identity);
  } catch (const PreconditionError& e) {
    throw ParseError(1, 0, e.what());
  }
}

std::string serialize_group(const GroupTable& group) {
  return serialize_table(TableFile{group.table(), group.identity()});
}

}  // namespace qsys
