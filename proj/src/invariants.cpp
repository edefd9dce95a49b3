#include "qsys/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qsys/colouring.hpp"
#include "text_util.hpp"

namespace qsys {

using detail::Cursor;
using detail::Line;
using detail::Token;

GroupPresentation wirtinger_presentation(const Diagram& d) {
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("invalid diagram:\n" + report.to_text());
  GroupPresentation p;
  p.generator_count = d.arc_count;
  for (const Crossing& x : d.crossings) {
    const int s = x.sign > 0 ? 1 : -1;
    p.relators.push_back(Word{{x.over, -s},
                              {x.under_in, 1},
                              {x.over, s},
                              {x.under_out, -1}});
  }
  for (const Vertex& v : d.vertices) {
    Word w;
    for (const VertexEnd& e : v.ends)
      w.push_back({e.arc, e.dir == Direction::in ? 1 : -1});
    p.relators.push_back(std::move(w));
  }
  return p;
}

namespace {

// Backtracking over generator values with propagation: a relator whose
// only unassigned generator occurs once determines that generator.
class HomSolver {
 public:
  HomSolver(const GroupPresentation& p, const GroupTable& g)
      : p_(p), g_(g), value_(p.generator_count, -1),
        touching_(p.generator_count) {
    for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
      for (const Letter& l : p.relators[r]) {
        if (l.generator < 0 || l.generator >= p.generator_count)
          throw PreconditionError("relator uses generator " +
                                  std::to_string(l.generator) +
                                  " out of range");
        if (l.exponent != 1 && l.exponent != -1)
          throw PreconditionError("exponents must be +1 or -1");
        auto& t = touching_[l.generator];
        if (t.empty() || t.back() != r) t.push_back(r);
      }
    }
  }

  std::uint64_t count() { return search(0); }

 private:
  int letter_value(const Letter& l) const {
    const int v = value_[l.generator];
    return l.exponent > 0 ? v : g_.inv(v);
  }

  bool assign(int gen, int val) {
    std::vector<std::pair<int, int>> queue{{gen, val}};
    while (!queue.empty()) {
      const auto [x, v] = queue.back();
      queue.pop_back();
      if (value_[x] >= 0) {
        if (value_[x] != v) return false;
        continue;
      }
      value_[x] = v;
      trail_.push_back(x);
      for (int r : touching_[x]) {
        const Word& w = p_.relators[r];
        int missing = -1;
        int missing_count = 0;
        bool repeated = false;
        for (const Letter& l : w)
          if (value_[l.generator] < 0) {
            if (missing == -1) {
              missing = l.generator;
              ++missing_count;
            } else if (l.generator == missing) {
              repeated = true;
            } else {
              ++missing_count;
            }
          }
        if (missing_count == 0) {
          int acc = g_.identity();
          for (const Letter& l : w) acc = g_.mul(acc, letter_value(l));
          if (acc != g_.identity()) return false;
        } else if (missing_count == 1 && !repeated) {
          // w = L x^e R = 1 gives x^e = L^-1 R^-1.
          int left = g_.identity();
          int right = g_.identity();
          int exponent = 1;
          bool before = true;
          for (const Letter& l : w) {
            if (l.generator == missing) {
              exponent = l.exponent;
              before = false;
            } else if (before) {
              left = g_.mul(left, letter_value(l));
            } else {
              right = g_.mul(right, letter_value(l));
            }
          }
          int forced = g_.mul(g_.inv(left), g_.inv(right));
          if (exponent < 0) forced = g_.inv(forced);
          queue.emplace_back(missing, forced);
        }
      }
    }
    return true;
  }

  void rewind(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  std::uint64_t search(int from) {
    while (from < p_.generator_count && value_[from] >= 0) ++from;
    if (from == p_.generator_count) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < g_.size(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(from, v)) total += search(from + 1);
      rewind(mark);
    }
    return total;
  }

  const GroupPresentation& p_;
  const GroupTable& g_;
  std::vector<int> value_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> trail_;
};

}  // namespace

std::uint64_t group_hom_count(const GroupPresentation& p, const GroupTable& g) {
  if (p.generator_count < 0)
    throw PreconditionError("generator count must be non-negative");
  HomSolver solver(p, g);
  return solver.count();
}

std::vector<PanelGroup> fingerprint_panel() {
  return {{"Z2", cyclic_group(2)},
          {"Z3", cyclic_group(3)},
          {"S3", symmetric_group(3)},
          {"Z4", cyclic_group(4)},
          {"D4", dihedral_group(4)}};
}

std::vector<std::uint64_t> hom_fingerprint(
    const GroupPresentation& p, const std::vector<PanelGroup>& panel) {
  std::vector<std::uint64_t> out;
  for (const PanelGroup& g : panel) out.push_back(group_hom_count(p, g.group));
  return out;
}

GroupPresentation parse_presentation(std::string_view text) {
  Cursor cursor(detail::tokenize(text));
  if (cursor.done()) throw ParseError(1, 0, "expected 'gens <n>'");
  const Line& header = cursor.next();
  if (header.tokens[0].text != "gens" || header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens[0].column,
                     "expected 'gens <n>'");
  GroupPresentation p;
  p.generator_count = detail::parse_int(header.tokens[1], header.number);
  while (!cursor.done()) {
    const Line& line = cursor.next();
    if (line.tokens[0].text != "rel")
      throw ParseError(line.number, line.tokens[0].column,
                       "expected 'rel <letters>'");
    Word w;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const Token& t = line.tokens[i];
      if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
        throw ParseError(line.number, t.column,
                         "letters are written +k or -k");
      const Token digits{t.text.substr(1), t.column + 1};
      const int gen = detail::parse_int(digits, line.number);
      if (gen >= p.generator_count)
        throw ParseError(line.number, t.column,
                         "generator " + std::to_string(gen) + " out of range");
      w.push_back({gen, t.text[0] == '+' ? 1 : -1});
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

std::string serialize_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  out << "gens " << p.generator_count << '\n';
  for (const Word& w : p.relators) {
    out << "rel";
    for (const Letter& l : w)
      out << ' ' << (l.exponent > 0 ? '+' : '-') << l.generator;
    out << '\n';
  }
  return out.str();
}

int LinkingMatrix::lk(int i, int j) const {
  const int t = twice.at(i).at(j);
  if (t % 2 != 0)
    throw PreconditionError("odd crossing count between components " +
                            std::to_string(i) + " and " + std::to_string(j) +
                            " (virtual diagram)");
  return t / 2;
}

LinkingMatrix linking_matrix(const Diagram& d) {
  if (!d.vertices.empty())
    throw PreconditionError("linking numbers need a diagram without vertices");
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("invalid diagram:\n" + report.to_text());
  LinkingMatrix m;
  const std::vector<int> comp = link_components(d, &m.component_count);
  m.twice.assign(m.component_count, std::vector<int>(m.component_count, 0));
  for (const Crossing& x : d.crossings) {
    const int a = comp[x.over];
    const int b = comp[x.under_in];
    if (a == b) continue;
    m.twice[a][b] += x.sign;
    m.twice[b][a] += x.sign;
  }
  return m;
}

std::vector<Diagram> kauffman_constituents(const Diagram& d) {
  for (const Vertex& v : d.vertices)
    if (v.valence() != 3)
      throw PreconditionError("constituent links need trivalent vertices");
  const std::vector<Edge> edges = compute_edges(d);
  const int nv = static_cast<int>(d.vertices.size());
  // edge_at[v][p] is the edge attached at end p of vertex v.
  std::vector<std::vector<int>> edge_at(nv, std::vector<int>(3, -1));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (const EdgeEndpoint& ep : edges[e].endpoints)
      edge_at[ep.vertex][ep.position] = e;
  std::vector<Diagram> out;
  std::vector<int> dropped(nv, 0);
  while (true) {
    std::vector<bool> deleted(edges.size(), false);
    for (int v = 0; v < nv; ++v) deleted[edge_at[v][dropped[v]]] = true;
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) {
      int lost = 0;
      for (int p = 0; p < 3; ++p) lost += deleted[edge_at[v][p]] ? 1 : 0;
      ok = lost == 1;
    }
    if (ok) {
      std::vector<int> list;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (deleted[e]) list.push_back(e);
      out.push_back(delete_edges(d, list));
    }
    int v = nv - 1;
    while (v >= 0 && dropped[v] == 2) dropped[v--] = 0;
    if (v < 0) break;
    ++dropped[v];
  }
  return out;
}

KauffmanSummary kauffman_summary(const Diagram& d,
                                 const SystemData* colour_system) {
  KauffmanSummary out;
  for (const Diagram& c : kauffman_constituents(d)) {
    std::vector<std::uint64_t> value;
    if (colour_system) {
      value.push_back(count_colourings(c, *colour_system));
    } else {
      const LinkingMatrix m = linking_matrix(c);
      for (int i = 0; i < m.component_count; ++i)
        for (int j = i + 1; j < m.component_count; ++j)
          value.push_back(static_cast<std::uint64_t>(std::abs(m.lk(i, j))));
      std::sort(value.begin(), value.end());
    }
    out.push_back(std::move(value));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string summary_to_text(const KauffmanSummary& summary) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < summary.size(); ++i) {
    out << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < summary[i].size(); ++j)
      out << (j ? ", " : "") << summary[i][j];
    out << ']';
  }
  out << '}';
  return out.str();
}

}  // namespace qsys
