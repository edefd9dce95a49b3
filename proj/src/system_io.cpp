#include "qsys/system_io.hpp"

#include <set>
#include <sstream>

#include "text_util.hpp"

namespace qsys {

using detail::Cursor;
using detail::Line;
using detail::Token;

namespace {

[[noreturn]] void fail(const Line& line, std::size_t token,
                       const std::string& message) {
  const int column =
      token < line.tokens.size() ? line.tokens[token].column : 0;
  throw ParseError(line.number, column, message);
}

int expect_header_int(Cursor& cursor, const std::string& key) {
  const Line& line = cursor.next();
  if (line.tokens[0].text != key || line.tokens.size() != 2)
    fail(line, 0, "expected '" + key + " <size>'");
  const int v = detail::parse_int(line.tokens[1], line.number);
  if (v <= 0) fail(line, 1, key + " must be positive");
  return v;
}

// Reads "<word> <index> = <perm>" where the permutation is either one
// comma-separated token or several space-separated tokens.
std::vector<int> read_assignment(const Line& line, int bound, int& index,
                                 int index_bound) {
  if (line.tokens.size() < 4 || line.tokens[2].text != "=")
    fail(line, 0, "expected '" + line.tokens[0].text + " <i> = <values>'");
  index = detail::parse_int(line.tokens[1], line.number);
  if (index < 0 || index >= index_bound) fail(line, 1, "index out of range");
  std::vector<int> values;
  if (line.tokens.size() == 4) {
    values = detail::parse_int_list(line.tokens[3].text, line.tokens[3],
                                    line.number);
  } else {
    for (std::size_t t = 3; t < line.tokens.size(); ++t)
      values.push_back(detail::parse_int(line.tokens[t], line.number));
  }
  for (int v : values)
    if (v < 0 || v >= bound) fail(line, 3, "value out of range");
  return values;
}

std::string join(const std::vector<int>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

void write_rows(std::ostringstream& out, const std::vector<int>& entries,
                int cols) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << entries[i] << ((i + 1) % cols == 0 ? '\n' : ' ');
  }
}

GroupTable read_group_rows(Cursor& cursor, const Line& header, int n,
                           int identity) {
  OperationTable t(n, cursor.read_matrix(n, n, n));
  try {
    return GroupTable(std::move(t), identity);
  } catch (const PreconditionError& e) {
    fail(header, 0, e.what());
  }
}

}  // namespace

SystemData parse_system(std::string_view text) {
  Cursor cursor(detail::tokenize(text));
  const Line& header = cursor.next();
  if (header.tokens[0].text != "system" || header.tokens.size() != 1)
    fail(header, 0, "expected 'system'");
  SystemData d;
  d.x_size = expect_header_int(cursor, "X");
  d.g_size = expect_header_int(cursor, "G");
  const int m = d.x_size, n = d.g_size;
  std::vector<std::optional<OperationTable>> star(n);
  std::optional<OperationTable> otimes;
  std::optional<std::vector<int>> f;
  std::vector<std::optional<std::vector<int>>> rho(m);
  std::set<std::string> seen;
  int first_line = 0;

  while (!cursor.done()) {
    const Line& line = cursor.next();
    if (!first_line) first_line = line.number;
    const std::string& word = line.tokens[0].text;
    auto once = [&](const std::string& key) {
      if (!seen.insert(key).second) fail(line, 0, "duplicate '" + key + "'");
    };
    if (word == "group") {
      once("group");
      if (line.tokens.size() < 2 || line.tokens.size() > 3)
        fail(line, 0, "expected 'group identity=<k> [inverse=<list>]'");
      const int id = detail::parse_int(
          Token{std::string(detail::key_value(line.tokens[1], line.number,
                                              "identity")),
                line.tokens[1].column},
          line.number);
      if (id < 0 || id >= n) fail(line, 1, "identity out of range");
      std::optional<std::vector<int>> inverse;
      if (line.tokens.size() == 3)
        inverse = detail::parse_int_list(
            detail::key_value(line.tokens[2], line.number, "inverse"),
            line.tokens[2], line.number);
      d.group = read_group_rows(cursor, line, n, id);
      if (inverse && *inverse != d.group->inverse())
        fail(line, 2, "inverse list does not match the group table");
    } else if (word == "otimes" || word == "oplus" || word == "f") {
      once(word);
      if (line.tokens.size() != 1) fail(line, 1, "unexpected token");
      std::vector<int> rows = cursor.read_matrix(n, n, n);
      if (word == "otimes") otimes = OperationTable(n, rows);
      else if (word == "oplus") d.oplus = OperationTable(n, rows);
      else f = std::move(rows);
    } else if (word == "star") {
      if (line.tokens.size() != 2) fail(line, 0, "expected 'star <g>'");
      const int g = detail::parse_int(line.tokens[1], line.number);
      if (g < 0 || g >= n) fail(line, 1, "star index out of range");
      once("star " + std::to_string(g));
      star[g] = OperationTable(m, cursor.read_matrix(m, m, m));
    } else if (word == "rho") {
      int x = 0;
      std::vector<int> perm = read_assignment(line, n, x, m);
      once("rho " + std::to_string(x));
      if (!is_permutation(perm, n))
        fail(line, 3, "rho_x must be a permutation of G");
      rho[x] = std::move(perm);
    } else if (word == "gamma") {
      if (line.tokens.size() != 2) fail(line, 0, "expected 'gamma <k>'");
      const int k = detail::parse_int(line.tokens[1], line.number);
      if (k < 2 || k > 4) fail(line, 1, "gamma arity must be 2, 3 or 4");
      once("gamma " + std::to_string(k));
      int rows = 1;
      for (int i = 1; i < k; ++i) rows *= n;
      d.gamma[k] = cursor.read_matrix(rows, n, n);
    } else {
      fail(line, 0, "unknown record '" + word + "'");
    }
  }

  const int end_line = cursor.last_line();
  for (int g = 0; g < n; ++g) {
    if (!star[g])
      throw ParseError(end_line, 0,
                       "missing 'star " + std::to_string(g) + "' block");
    d.star.push_back(std::move(*star[g]));
  }
  if (d.group) {
    if (!otimes) otimes = conjugation_quandle(*d.group, 1);
    if (!f) {
      f.emplace();
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) f->push_back(h);
    }
    if (!d.oplus) d.oplus = d.group->table();
    bool any_rho = false;
    for (const auto& r : rho) any_rho |= r.has_value();
    if (!any_rho)
      for (auto& r : rho) r = d.group->inverse();
  }
  if (!otimes) throw ParseError(end_line, 0, "missing 'otimes' block");
  if (!f) throw ParseError(end_line, 0, "missing 'f' block");
  d.otimes = std::move(*otimes);
  d.f = std::move(*f);
  bool any_rho = false, all_rho = true;
  for (const auto& r : rho) {
    any_rho |= r.has_value();
    all_rho &= r.has_value();
  }
  if (any_rho && !all_rho)
    throw ParseError(end_line, 0, "rho must be given for every x or none");
  if (all_rho && any_rho)
    for (auto& r : rho) d.rho.push_back(std::move(*r));
  try {
    d.check_shape();
  } catch (const PreconditionError& e) {
    throw ParseError(end_line, 0, e.what());
  }
  return d;
}

std::string serialize_system(const SystemData& d) {
  d.check_shape();
  std::ostringstream out;
  const int n = d.g_size;
  out << "system\nX " << d.x_size << "\nG " << n << '\n';
  if (d.group) {
    out << "group identity=" << d.group->identity()
        << " inverse=" << join(d.group->inverse(), ',') << '\n';
    write_rows(out, d.group->table().entries(), n);
  }
  out << "otimes\n";
  write_rows(out, d.otimes.entries(), n);
  if (d.oplus) {
    out << "oplus\n";
    write_rows(out, d.oplus->entries(), n);
  }
  out << "f\n";
  write_rows(out, d.f, n);
  for (int g = 0; g < n; ++g) {
    out << "star " << g << '\n';
    write_rows(out, d.star[g].entries(), d.x_size);
  }
  for (int x = 0; x < static_cast<int>(d.rho.size()); ++x)
    out << "rho " << x << " = " << join(d.rho[x], ',') << '\n';
  for (const auto& [k, table] : d.gamma) {
    out << "gamma " << k << '\n';
    write_rows(out, table, n);
  }
  return out.str();
}

AxetData parse_axet(std::string_view text) {
  Cursor cursor(detail::tokenize(text));
  const Line& header = cursor.next();
  if (header.tokens[0].text != "axet" || header.tokens.size() != 1)
    fail(header, 0, "expected 'axet'");
  AxetData a;
  a.x_size = expect_header_int(cursor, "X");
  auto read_group = [&](const std::string& key) {
    const Line& line = cursor.next();
    if (line.tokens[0].text != key || line.tokens.size() != 3)
      fail(line, 0, "expected '" + key + " <size> identity=<e>'");
    const int size = detail::parse_int(line.tokens[1], line.number);
    if (size <= 0) fail(line, 1, "size must be positive");
    const int id = detail::parse_int(
        Token{std::string(
                  detail::key_value(line.tokens[2], line.number, "identity")),
              line.tokens[2].column},
        line.number);
    if (id < 0 || id >= size) fail(line, 2, "identity out of range");
    return read_group_rows(cursor, line, size, id);
  };
  a.s_group = read_group("S");
  a.g_group = read_group("G");
  std::vector<std::optional<std::vector<int>>> action(a.g_group.size());
  bool have_tau = false;
  while (!cursor.done()) {
    const Line& line = cursor.next();
    const std::string& word = line.tokens[0].text;
    if (word == "action") {
      int g = 0;
      std::vector<int> perm = read_assignment(line, a.x_size, g,
                                              a.g_group.size());
      if (action[g]) fail(line, 1, "duplicate action");
      if (!is_permutation(perm, a.x_size))
        fail(line, 3, "action must be a permutation of X");
      action[g] = std::move(perm);
    } else if (word == "tau") {
      if (have_tau) fail(line, 0, "duplicate 'tau'");
      have_tau = true;
      std::vector<int> rows = cursor.read_matrix(a.x_size, a.s_group.size(),
                                                 a.g_group.size());
      for (int x = 0; x < a.x_size; ++x)
        a.tau.emplace_back(rows.begin() + x * a.s_group.size(),
                           rows.begin() + (x + 1) * a.s_group.size());
    } else {
      fail(line, 0, "unknown record '" + word + "'");
    }
  }
  const int end_line = cursor.last_line();
  for (int g = 0; g < a.g_group.size(); ++g) {
    if (!action[g])
      throw ParseError(end_line, 0,
                       "missing 'action " + std::to_string(g) + "'");
    a.action.push_back(std::move(*action[g]));
  }
  if (!have_tau) throw ParseError(end_line, 0, "missing 'tau' block");
  return a;
}

std::string serialize_axet(const AxetData& a) {
  std::ostringstream out;
  out << "axet\nX " << a.x_size << '\n';
  out << "S " << a.s_group.size() << " identity=" << a.s_group.identity()
      << '\n';
  write_rows(out, a.s_group.table().entries(), a.s_group.size());
  out << "G " << a.g_group.size() << " identity=" << a.g_group.identity()
      << '\n';
  write_rows(out, a.g_group.table().entries(), a.g_group.size());
  for (int g = 0; g < static_cast<int>(a.action.size()); ++g)
    out << "action " << g << " = " << join(a.action[g], ',') << '\n';
  out << "tau\n";
  for (const auto& row : a.tau) out << join(row, ' ') << '\n';
  return out.str();
}

std::variant<SystemData, AxetData> parse_system_or_axet(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (!lines.empty() && lines[0].tokens[0].text == "axet")
    return parse_axet(text);
  return parse_system(text);
}

}  // namespace qsys
