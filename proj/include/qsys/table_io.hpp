#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qsys/algebra.hpp"
#include "qsys/parse_error.hpp"

namespace qsys {

// Contents of a table file: `magma <size>`, an optional `identity <k>`
// line (group files), then size rows of size entries.
struct TableFile {
  OperationTable table;
  std::optional<int> identity;
};

TableFile parse_table(std::string_view text);
std::string serialize_table(const TableFile& file);
std::string serialize_table(const OperationTable& table);

// Parses a group file; the identity line is required and the group axioms
// must hold (violations are reported as a ParseError on line 1).
GroupTable parse_group(std::string_view text);
std::string serialize_group(const GroupTable& group);

}  // namespace qsys
