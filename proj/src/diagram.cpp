#include "qsys/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "qsys/algebra.hpp"
#include "text_util.hpp"

namespace qsys {

using detail::Line;
using detail::Token;

namespace {

bool in_range(int a, int n) { return a >= 0 && a < n; }

// Minimal union-find over arc indices.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ArcIncidence incidence(const Diagram& d) {
  const int n = d.arc_count;
  ArcIncidence inc;
  inc.producer.assign(n, {});
  inc.consumer.assign(n, {});
  inc.over_at.assign(n, {});
  auto place = [&](std::vector<ArcSlot>& slots, int arc, ArcSlot slot,
                   const char* role) {
    if (!in_range(arc, n))
      throw PreconditionError("arc index " + std::to_string(arc) +
                              " out of range");
    if (slots[arc].kind != ArcSlot::Kind::none)
      throw PreconditionError("arc " + std::to_string(arc) + " has two " +
                              role + "s");
    slots[arc] = slot;
  };
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    const Crossing& x = d.crossings[c];
    const ArcSlot slot{ArcSlot::Kind::crossing, c, -1};
    place(inc.consumer, x.under_in, slot, "consumer");
    place(inc.producer, x.under_out, slot, "producer");
    if (!in_range(x.over, n))
      throw PreconditionError("arc index " + std::to_string(x.over) +
                              " out of range");
    inc.over_at[x.over].push_back(c);
  }
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const auto& ends = d.vertices[v].ends;
    for (int p = 0; p < static_cast<int>(ends.size()); ++p) {
      const ArcSlot slot{ArcSlot::Kind::vertex, v, p};
      if (ends[p].dir == Direction::out)
        place(inc.producer, ends[p].arc, slot, "producer");
      else
        place(inc.consumer, ends[p].arc, slot, "consumer");
    }
  }
  return inc;
}

Diagram parse_diagram(std::string_view text) {
  detail::Cursor cursor(detail::tokenize(text));
  const Line& header = cursor.next();
  if (header.tokens[0].text != "arcs" || header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens[0].column,
                     "expected 'arcs <N>'");
  Diagram d;
  d.arc_count = detail::parse_int(header.tokens[1], header.number);
  if (d.arc_count < 0)
    throw ParseError(header.number, header.tokens[1].column,
                     "arc count must be non-negative");
  auto arc_value = [&](const Token& token, std::string_view text, int line) {
    const int a = detail::parse_int(Token{std::string(text), token.column}, line);
    if (!in_range(a, d.arc_count))
      throw ParseError(line, token.column,
                       "arc index " + std::to_string(a) + " out of range");
    return a;
  };
  std::vector<std::pair<int, const Line*>> loops;
  while (!cursor.done()) {
    const Line& line = cursor.next();
    const std::string& word = line.tokens[0].text;
    if (word == "crossing") {
      if (line.tokens.size() != 5)
        throw ParseError(line.number, line.tokens[0].column,
                         "crossing needs over=, under_in=, under_out=, sign=");
      Crossing x;
      bool have[4] = {false, false, false, false};
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const Token& token = line.tokens[t];
        const auto eq = token.text.find('=');
        const std::string key = token.text.substr(0, eq);
        const std::string value =
            eq == std::string::npos ? "" : token.text.substr(eq + 1);
        int slot = -1;
        if (key == "over") slot = 0;
        else if (key == "under_in") slot = 1;
        else if (key == "under_out") slot = 2;
        else if (key == "sign") slot = 3;
        if (slot < 0 || eq == std::string::npos)
          throw ParseError(line.number, token.column,
                           "unknown crossing field '" + token.text + "'");
        if (have[slot])
          throw ParseError(line.number, token.column,
                           "duplicate field '" + key + "'");
        have[slot] = true;
        if (slot == 0) x.over = arc_value(token, value, line.number);
        if (slot == 1) x.under_in = arc_value(token, value, line.number);
        if (slot == 2) x.under_out = arc_value(token, value, line.number);
        if (slot == 3) {
          if (value == "+") x.sign = 1;
          else if (value == "-") x.sign = -1;
          else
            throw ParseError(line.number, token.column,
                             "sign must be '+' or '-', got '" + value + "'");
        }
      }
      d.crossings.push_back(x);
    } else if (word == "vertex") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, line.tokens[0].column,
                         "expected 'vertex ends=<a>:<in|out>,...'");
      const Token& token = line.tokens[1];
      const std::string_view list =
          detail::key_value(token, line.number, "ends");
      Vertex v;
      std::size_t start = 0;
      while (true) {
        std::size_t end = list.find(',', start);
        if (end == std::string_view::npos) end = list.size();
        const std::string_view item = list.substr(start, end - start);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
          throw ParseError(line.number, token.column,
                           "vertex end '" + std::string(item) +
                               "' needs ':in' or ':out'");
        VertexEnd e;
        e.arc = arc_value(token, item.substr(0, colon), line.number);
        const std::string_view dir = item.substr(colon + 1);
        if (dir == "in") e.dir = Direction::in;
        else if (dir == "out") e.dir = Direction::out;
        else
          throw ParseError(line.number, token.column,
                           "direction must be 'in' or 'out', got '" +
                               std::string(dir) + "'");
        v.ends.push_back(e);
        if (end == list.size()) break;
        start = end + 1;
      }
      d.vertices.push_back(std::move(v));
    } else if (word == "loop") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, line.tokens[0].column,
                         "expected 'loop <arc>'");
      loops.emplace_back(
          arc_value(line.tokens[1], line.tokens[1].text, line.number), &line);
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown record type '" + word + "'");
    }
  }
  if (!loops.empty()) {
    // A loop flag is only meaningful for an arc without endpoints.
    std::vector<bool> attached(d.arc_count, false);
    for (const Crossing& x : d.crossings)
      attached[x.under_in] = attached[x.under_out] = true;
    for (const Vertex& v : d.vertices)
      for (const VertexEnd& e : v.ends) attached[e.arc] = true;
    for (const auto& [arc, line] : loops)
      if (attached[arc])
        throw ParseError(line->number, line->tokens[1].column,
                         "arc " + std::to_string(arc) +
                             " is attached, not a free loop");
  }
  return d;
}

AxiomReport validate_diagram(const Diagram& d) {
  AxiomReport report;
  const int n = d.arc_count;
  std::vector<int> producers(std::max(n, 0), 0), consumers(std::max(n, 0), 0);
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    const Crossing& x = d.crossings[c];
    if (!in_range(x.over, n) || !in_range(x.under_in, n) ||
        !in_range(x.under_out, n)) {
      report.add("arc-range", {0, c});
      continue;
    }
    if (x.sign != 1 && x.sign != -1) report.add("sign", {c});
    ++consumers[x.under_in];
    ++producers[x.under_out];
  }
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const Vertex& vx = d.vertices[v];
    if (vx.valence() < 3) report.add("valence", {v});
    bool ok = true;
    for (const VertexEnd& e : vx.ends) ok &= in_range(e.arc, n);
    if (!ok) {
      report.add("arc-range", {1, v});
      continue;
    }
    for (const VertexEnd& e : vx.ends)
      ++(e.dir == Direction::out ? producers : consumers)[e.arc];
  }
  for (int a = 0; a < n; ++a) {
    if (producers[a] > 1) report.add("producer", {a});
    if (consumers[a] > 1) report.add("consumer", {a});
    if ((producers[a] == 0) != (consumers[a] == 0)) report.add("dangling", {a});
  }
  return report;
}

std::string serialize_diagram(const Diagram& d) {
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("cannot serialize an invalid diagram:\n" +
                            report.to_text());
  std::ostringstream out;
  out << "arcs " << d.arc_count << '\n';
  for (const Crossing& x : d.crossings)
    out << "crossing over=" << x.over << " under_in=" << x.under_in
        << " under_out=" << x.under_out << " sign=" << (x.sign > 0 ? '+' : '-')
        << '\n';
  for (const Vertex& v : d.vertices) {
    out << "vertex ends=";
    for (std::size_t i = 0; i < v.ends.size(); ++i)
      out << (i ? "," : "") << v.ends[i].arc << ':'
          << (v.ends[i].dir == Direction::in ? "in" : "out");
    out << '\n';
  }
  return out.str();
}

std::vector<Edge> compute_edges(const Diagram& d) {
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("invalid diagram:\n" + report.to_text());
  const ArcIncidence inc = incidence(d);
  std::vector<bool> seen(d.arc_count, false);
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const auto& ends = d.vertices[v].ends;
    for (int p = 0; p < static_cast<int>(ends.size()); ++p) {
      if (ends[p].dir != Direction::out) continue;
      Edge edge;
      edge.endpoints.push_back({v, p});
      int arc = ends[p].arc;
      while (true) {
        edge.arcs.push_back(arc);
        seen[arc] = true;
        const ArcSlot& next = inc.consumer[arc];
        if (next.kind == ArcSlot::Kind::vertex) {
          edge.endpoints.push_back({next.index, next.position});
          break;
        }
        arc = d.crossings[next.index].under_out;
      }
      edges.push_back(std::move(edge));
    }
  }
  for (int a = 0; a < d.arc_count; ++a) {
    if (seen[a]) continue;
    Edge edge;
    int arc = a;
    do {
      edge.arcs.push_back(arc);
      seen[arc] = true;
      const ArcSlot& next = inc.consumer[arc];
      if (next.kind == ArcSlot::Kind::none) break;
      arc = d.crossings[next.index].under_out;
    } while (arc != a);
    edges.push_back(std::move(edge));
  }
  return edges;
}

Diagram reverse_arcs(const Diagram& d, const std::vector<bool>& flip) {
  Diagram out = d;
  for (Crossing& x : out.crossings) {
    if (flip[x.under_in] != flip[x.under_out])
      throw PreconditionError(
          "reversal must flip both under arcs of a crossing");
    if (flip[x.under_in]) {
      std::swap(x.under_in, x.under_out);
      x.sign = -x.sign;
    }
    if (flip[x.over]) x.sign = -x.sign;
  }
  for (Vertex& v : out.vertices)
    for (VertexEnd& e : v.ends)
      if (flip[e.arc])
        e.dir = e.dir == Direction::in ? Direction::out : Direction::in;
  return out;
}

Diagram reverse_edge(const Diagram& d, int edge) {
  const std::vector<Edge> edges = compute_edges(d);
  if (!in_range(edge, static_cast<int>(edges.size())))
    throw PreconditionError("edge index out of range");
  std::vector<bool> flip(d.arc_count, false);
  for (int a : edges[edge].arcs) flip[a] = true;
  return reverse_arcs(d, flip);
}

Diagram delete_edges(const Diagram& d, const std::vector<int>& doomed) {
  const std::vector<Edge> edges = compute_edges(d);
  std::vector<bool> dead(d.arc_count, false);
  for (int e : doomed) {
    if (!in_range(e, static_cast<int>(edges.size())))
      throw PreconditionError("edge index " + std::to_string(e) +
                              " is not an edge of the diagram");
    for (int a : edges[e].arcs) dead[a] = true;
  }

  // Surviving crossings, and under-strand joins left by dead over-arcs.
  std::vector<Crossing> kept;
  std::vector<std::pair<int, int>> joins;
  for (const Crossing& x : d.crossings) {
    if (dead[x.under_in]) continue;
    if (dead[x.over]) joins.emplace_back(x.under_in, x.under_out);
    else kept.push_back(x);
  }
  std::vector<std::pair<VertexEnd, VertexEnd>> smoothings;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    std::vector<VertexEnd> alive;
    for (const VertexEnd& e : d.vertices[v].ends)
      if (!dead[e.arc]) alive.push_back(e);
    if (alive.empty()) continue;
    if (alive.size() != 2)
      throw PreconditionError("vertex " + std::to_string(v) + " keeps " +
                              std::to_string(alive.size()) +
                              " ends; deletion must leave 0 or 2");
    smoothings.emplace_back(alive[0], alive[1]);
  }

  // Orient every surviving strand consistently: an arc must be reversed
  // relative to its neighbour across a smoothed vertex whose two ends point
  // the same way.
  std::vector<std::vector<std::pair<int, int>>> adj(d.arc_count);
  auto link = [&](int a, int b, int parity) {
    adj[a].emplace_back(b, parity);
    adj[b].emplace_back(a, parity);
  };
  for (const Crossing& x : kept) link(x.under_in, x.under_out, 0);
  for (const auto& [a, b] : joins) link(a, b, 0);
  for (const auto& [p, q] : smoothings) link(p.arc, q.arc, p.dir == q.dir);
  std::vector<int> flip(d.arc_count, -1);
  for (int a = 0; a < d.arc_count; ++a) {
    if (dead[a] || flip[a] >= 0) continue;
    flip[a] = 0;
    std::deque<int> queue{a};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, parity] : adj[u]) {
        const int want = flip[u] ^ parity;
        if (flip[w] < 0) {
          flip[w] = want;
          queue.push_back(w);
        } else if (flip[w] != want) {
          throw std::logic_error("inconsistent strand orientation");
        }
      }
    }
  }
  std::vector<bool> flipped(d.arc_count, false);
  for (int a = 0; a < d.arc_count; ++a) flipped[a] = flip[a] == 1;
  for (Crossing& x : kept) {
    if (flipped[x.under_in]) {
      std::swap(x.under_in, x.under_out);
      x.sign = -x.sign;
    }
    if (flipped[x.over]) x.sign = -x.sign;
  }

  Partition classes(d.arc_count);
  for (const auto& [a, b] : joins) classes.unite(a, b);
  for (const auto& [p, q] : smoothings) classes.unite(p.arc, q.arc);
  std::vector<int> renumber(d.arc_count, -1);
  Diagram out;
  for (int a = 0; a < d.arc_count; ++a) {
    if (dead[a]) continue;
    const int root = classes.find(a);
    if (renumber[root] < 0) renumber[root] = out.arc_count++;
    renumber[a] = renumber[root];
  }
  for (Crossing x : kept) {
    x.over = renumber[x.over];
    x.under_in = renumber[x.under_in];
    x.under_out = renumber[x.under_out];
    out.crossings.push_back(x);
  }
  return out;
}

std::vector<int> link_components(const Diagram& d, int* count) {
  Partition classes(d.arc_count);
  for (const Crossing& x : d.crossings) classes.unite(x.under_in, x.under_out);
  std::vector<int> id(d.arc_count, -1), out(d.arc_count);
  int next = 0;
  for (int a = 0; a < d.arc_count; ++a) {
    const int root = classes.find(a);
    if (id[root] < 0) id[root] = next++;
    out[a] = id[root];
  }
  if (count) *count = next;
  return out;
}

namespace {

struct RelabelSearch {
  const Diagram& a;
  const Diagram& b;
  std::vector<int> map;      // arc of a -> arc of b
  std::vector<int> inverse;  // arc of b -> arc of a

  bool bind(int x, int y, std::vector<int>& trail) {
    if (map[x] >= 0) return map[x] == y;
    if (inverse[y] >= 0) return false;
    map[x] = y;
    inverse[y] = x;
    trail.push_back(x);
    return true;
  }
  void undo(std::vector<int>& trail, std::size_t size) {
    while (trail.size() > size) {
      inverse[map[trail.back()]] = -1;
      map[trail.back()] = -1;
      trail.pop_back();
    }
  }

  bool crossings_match(std::vector<int>& trail) {
    for (std::size_t c = 0; c < a.crossings.size(); ++c) {
      const Crossing& x = a.crossings[c];
      const Crossing& y = b.crossings[c];
      if (x.sign != y.sign || !bind(x.over, y.over, trail) ||
          !bind(x.under_in, y.under_in, trail) ||
          !bind(x.under_out, y.under_out, trail))
        return false;
    }
    return true;
  }

  bool vertices_from(std::size_t v, std::vector<int>& trail) {
    if (v == a.vertices.size()) {
      const std::size_t mark = trail.size();
      if (crossings_match(trail)) return true;
      undo(trail, mark);
      return false;
    }
    const auto& ea = a.vertices[v].ends;
    const auto& eb = b.vertices[v].ends;
    if (ea.size() != eb.size()) return false;
    const std::size_t k = ea.size();
    for (std::size_t shift = 0; shift < k; ++shift) {
      const std::size_t mark = trail.size();
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const VertexEnd& x = ea[i];
        const VertexEnd& y = eb[(i + shift) % k];
        ok = x.dir == y.dir && bind(x.arc, y.arc, trail);
      }
      if (ok && vertices_from(v + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

bool equivalent_up_to_relabelling(const Diagram& a, const Diagram& b) {
  if (a.arc_count != b.arc_count || a.crossings.size() != b.crossings.size() ||
      a.vertices.size() != b.vertices.size())
    return false;
  RelabelSearch search{a, b, std::vector<int>(a.arc_count, -1),
                       std::vector<int>(b.arc_count, -1)};
  std::vector<int> trail;
  // Arcs left unbound are free loops that pass over nothing in both
  // diagrams; since the arc counts agree, they pair up.
  return search.vertices_from(0, trail);
}

}  // namespace qsys
