#include "qsys/moves.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qsys/colouring.hpp"

namespace qsys {

namespace {

int dir_sign(Direction d) { return d == Direction::in ? 1 : -1; }

// Mutable view of a diagram with helpers for cutting arcs and dropping
// crossings; finish() renumbers the surviving arcs densely.
class Editor {
 public:
  explicit Editor(const Diagram& d)
      : d_(d), dead_(static_cast<std::size_t>(d.arc_count), false) {}

  Diagram& diagram() { return d_; }

  int new_arc() {
    dead_.push_back(false);
    return d_.arc_count++;
  }

  void kill(int arc) { dead_[arc] = true; }
  void revive(int arc) { dead_[arc] = false; }

  bool is_free(int arc) const {
    for (const Crossing& x : d_.crossings)
      if (x.under_in == arc || x.under_out == arc) return false;
    for (const Vertex& v : d_.vertices)
      for (const VertexEnd& e : v.ends)
        if (e.arc == arc) return false;
    return true;
  }

  // Splits `arc` in two and returns (upstream, downstream) pieces. The
  // piece keeping the old index keeps every over-crossing; the new piece
  // takes over the consumer slot (new_downstream) or the producer slot.
  // A free loop is not split: both pieces are the arc itself.
  std::pair<int, int> cut(int arc, bool new_downstream) {
    if (is_free(arc)) return {arc, arc};
    const int fresh = new_arc();
    if (new_downstream) {
      replace_slot(arc, fresh, Direction::in);
      return {arc, fresh};
    }
    replace_slot(arc, fresh, Direction::out);
    return {fresh, arc};
  }

  void add_crossing(int over, int under_in, int under_out, int sign) {
    d_.crossings.push_back(Crossing{over, under_in, under_out, sign});
  }

  void erase_crossings(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
      d_.crossings.erase(d_.crossings.begin() + *it);
  }

  MoveResult finish(int original_arcs) {
    std::vector<int> map(d_.arc_count, -1);
    int next = 0;
    for (int a = 0; a < d_.arc_count; ++a)
      if (!dead_[a]) map[a] = next++;
    for (Crossing& x : d_.crossings) {
      x.over = map[x.over];
      x.under_in = map[x.under_in];
      x.under_out = map[x.under_out];
    }
    for (Vertex& v : d_.vertices)
      for (VertexEnd& e : v.ends) e.arc = map[e.arc];
    d_.arc_count = next;
    map.resize(original_arcs);
    return MoveResult{std::move(d_), std::move(map)};
  }

 private:
  // Replaces `arc` by `fresh` in its consumer slot (role == in) or its
  // producer slot (role == out).
  void replace_slot(int arc, int fresh, Direction role) {
    for (Crossing& x : d_.crossings) {
      if (role == Direction::in && x.under_in == arc) {
        x.under_in = fresh;
        return;
      }
      if (role == Direction::out && x.under_out == arc) {
        x.under_out = fresh;
        return;
      }
    }
    for (Vertex& v : d_.vertices)
      for (VertexEnd& e : v.ends)
        if (e.arc == arc && e.dir == role) {
          e.arc = fresh;
          return;
        }
  }

  Diagram d_;
  std::vector<bool> dead_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw MoveError(message);
}

void require_valid(const Diagram& d) {
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("invalid diagram:\n" + report.to_text());
}

const Vertex& vertex_at(const Diagram& d, int v) {
  require(v >= 0 && v < static_cast<int>(d.vertices.size()),
          "vertex " + std::to_string(v) + " out of range");
  return d.vertices[v];
}

void require_arc(const Diagram& d, int a) {
  require(a >= 0 && a < d.arc_count,
          "arc " + std::to_string(a) + " out of range");
}

std::vector<int> block(int start, int length, int valence) {
  std::vector<int> out;
  for (int t = 0; t < length; ++t) out.push_back((start + t) % valence);
  return out;
}

bool incident(const Vertex& v, int arc) {
  return std::any_of(v.ends.begin(), v.ends.end(),
                     [&](const VertexEnd& e) { return e.arc == arc; });
}

// The under-strand of a tr2 site, as found in a diagram.
struct Tr2Site {
  bool strand_under = false;  // the strand passes under the block's ends
  int tau = 1;
  int strand = -1;            // over-strand (strand_under == false)
  std::vector<int> crossings; // one per block end, in strand order
  std::vector<int> far;       // far pieces (strand_under == false)
  int up = -1;                // under-strand ends (strand_under == true)
  int down = -1;
  std::vector<int> intermediates;
};

// Every block end passes under one common strand through its own crossing.
std::optional<Tr2Site> find_strand_over(const Diagram& d,
                                        const ArcIncidence& inc,
                                        const Vertex& v,
                                        const std::vector<int>& positions) {
  Tr2Site site;
  std::set<int> used;
  for (std::size_t t = 0; t < positions.size(); ++t) {
    const VertexEnd& e = v.ends[positions[t]];
    const int near = e.arc;
    const ArcSlot slot = e.dir == Direction::in ? inc.producer[near]
                                                : inc.consumer[near];
    if (slot.kind != ArcSlot::Kind::crossing) return std::nullopt;
    if (!inc.over_at[near].empty()) return std::nullopt;
    const Crossing& x = d.crossings[slot.index];
    const int far = e.dir == Direction::in ? x.under_in : x.under_out;
    if (far == near) return std::nullopt;
    if (!used.insert(slot.index).second) return std::nullopt;
    const int tau = x.sign * dir_sign(e.dir);
    if (t == 0) {
      site.strand = x.over;
      site.tau = tau;
    } else if (x.over != site.strand || tau != site.tau) {
      return std::nullopt;
    }
    site.crossings.push_back(slot.index);
    site.far.push_back(far);
  }
  if (incident(v, site.strand)) return std::nullopt;
  for (int f : site.far)
    if (f == site.strand) return std::nullopt;
  return site;
}

// One strand passes under every block end in a row: in listed order when
// tau = +1 and in reverse order when tau = -1.
std::optional<Tr2Site> find_strand_under(const Diagram& d,
                                         const ArcIncidence& inc,
                                         const Vertex& v,
                                         const std::vector<int>& positions) {
  for (int tau : {1, -1}) {
    std::vector<int> order = positions;
    if (tau < 0) std::reverse(order.begin(), order.end());
    auto matches = [&](int c, int t) {
      const VertexEnd& e = v.ends[order[t]];
      const Crossing& x = d.crossings[c];
      return x.over == e.arc && x.sign * dir_sign(e.dir) == tau;
    };
    for (int first : inc.over_at[v.ends[order[0]].arc]) {
      if (!matches(first, 0)) continue;
      Tr2Site site;
      site.strand_under = true;
      site.tau = tau;
      site.crossings = {first};
      bool ok = true;
      for (std::size_t t = 1; t < order.size() && ok; ++t) {
        const int m = d.crossings[site.crossings.back()].under_out;
        const ArcSlot next = inc.consumer[m];
        ok = next.kind == ArcSlot::Kind::crossing &&
             inc.over_at[m].empty() &&
             std::find(site.crossings.begin(), site.crossings.end(),
                       next.index) == site.crossings.end() &&
             matches(next.index, static_cast<int>(t));
        if (ok) {
          site.intermediates.push_back(m);
          site.crossings.push_back(next.index);
        }
      }
      if (!ok) continue;
      site.up = d.crossings[site.crossings.front()].under_in;
      site.down = d.crossings[site.crossings.back()].under_out;
      if (incident(v, site.up) || incident(v, site.down)) continue;
      return site;
    }
  }
  return std::nullopt;
}

MoveResult apply_r1(const Diagram& d, const MoveSpec& m) {
  require_arc(d, m.site);
  Editor ed(d);
  const auto [up, down] = ed.cut(m.site, true);
  const int sign = m.mirror ? -m.sign : m.sign;
  ed.add_crossing(m.over_first ? up : down, up, down, sign);
  return ed.finish(d.arc_count);
}

MoveResult apply_r2(const Diagram& d, const MoveSpec& m) {
  require_arc(d, m.site);
  require_arc(d, m.other);
  Editor ed(d);
  const int sign = m.mirror ? -m.sign : m.sign;
  // The over arc keeps its index through both cuts (the old index always
  // names the upstream piece), also when it is the under arc itself.
  const auto [u1, d1] = ed.cut(m.site, true);
  ed.add_crossing(m.other, u1, d1, sign);
  const auto [u2, d2] = ed.cut(d1, true);
  ed.add_crossing(m.other, u2, d2, -sign);
  return ed.finish(d.arc_count);
}

// Cuts the arc at end `position` of vertex v so that the piece touching the
// vertex is new; returns (far, near).
std::pair<int, int> cut_near(Editor& ed, int v, int position) {
  const VertexEnd e = ed.diagram().vertices[v].ends[position];
  if (e.dir == Direction::in) {
    const auto [up, down] = ed.cut(e.arc, true);
    return {up, down};
  }
  const auto [up, down] = ed.cut(e.arc, false);
  return {down, up};
}

// Adds the crossing where the end at `position` (already cut into far/near)
// passes under `over`; tau = +1 means the near colour is the far colour
// acted on by the over colour, each read inward at the vertex.
void cross_end(Editor& ed, int v, int position, int far, int near, int over,
               int over_dir, int tau) {
  const Direction dir = ed.diagram().vertices[v].ends[position].dir;
  const int sign = tau * dir_sign(dir) * over_dir;
  if (dir == Direction::in)
    ed.add_crossing(over, far, near, sign);
  else
    ed.add_crossing(over, near, far, sign);
}

MoveResult apply_tr1(const Diagram& d, const MoveSpec& m) {
  const Vertex& vx = vertex_at(d, m.site);
  const int k = vx.valence();
  require(k >= 2, "vertex has fewer than two ends");
  require(m.position >= 0 && m.position < k, "end position out of range");
  const int i = m.position;
  const int j = (i + 1) % k;
  const int side = m.mirror ? 1 - m.side : m.side;
  const int u = side == 0 ? i : j;
  const int o = side == 0 ? j : i;
  const int tau = side == 0 ? 1 : -1;
  Editor ed(d);
  const auto [far, near] = cut_near(ed, m.site, u);
  const VertexEnd over_end = ed.diagram().vertices[m.site].ends[o];
  cross_end(ed, m.site, u, far, near, over_end.arc, dir_sign(over_end.dir),
            tau);
  auto& ends = ed.diagram().vertices[m.site].ends;
  std::swap(ends[i], ends[j]);
  return ed.finish(d.arc_count);
}

MoveResult apply_tr2(const Diagram& d, const MoveSpec& m) {
  const Vertex& vx = vertex_at(d, m.site);
  const int k = vx.valence();
  require(m.length >= 1 && m.length < k, "block length out of range");
  require(m.position >= 0 && m.position < k, "end position out of range");
  const ArcIncidence inc = incidence(d);
  const std::vector<int> b1 = block(m.position, m.length, k);
  const std::vector<int> b2 = block(m.position + m.length, k - m.length, k);
  const std::optional<Tr2Site> site =
      m.side == 0 ? find_strand_over(d, inc, vx, b1)
                  : find_strand_under(d, inc, vx, b1);
  require(site.has_value(), "no strand crosses the whole block");
  Editor ed(d);
  const int tau = -site->tau;
  if (!site->strand_under) {
    // Drop the crossings: each end reattaches to its far piece.
    auto& ends = ed.diagram().vertices[m.site].ends;
    for (std::size_t t = 0; t < b1.size(); ++t) {
      ed.kill(ends[b1[t]].arc);
      ends[b1[t]].arc = site->far[t];
    }
    ed.erase_crossings(site->crossings);
    for (int q : b2) {
      const auto [far, near] = cut_near(ed, m.site, q);
      cross_end(ed, m.site, q, far, near, site->strand, 1, tau);
    }
    return ed.finish(d.arc_count);
  }
  std::vector<int> spare = site->intermediates;
  for (int a : spare) ed.kill(a);
  ed.erase_crossings(site->crossings);
  std::vector<int> order = b2;
  if (tau < 0) std::reverse(order.begin(), order.end());
  int in = site->up;
  for (std::size_t t = 0; t < order.size(); ++t) {
    int out = site->down;
    if (t + 1 < order.size()) {
      if (!spare.empty()) {
        out = spare.front();
        spare.erase(spare.begin());
        ed.revive(out);
      } else {
        out = ed.new_arc();
      }
    }
    const VertexEnd e = ed.diagram().vertices[m.site].ends[order[t]];
    ed.add_crossing(e.arc, in, out, tau * dir_sign(e.dir));
    in = out;
  }
  return ed.finish(d.arc_count);
}

struct SrSite {
  int producer = -1;
  int consumer = -1;
};

std::optional<SrSite> find_sr(const Diagram& d, const ArcIncidence& inc,
                              int arc) {
  if (arc < 0 || arc >= d.arc_count) return std::nullopt;
  const ArcSlot p = inc.producer[arc];
  const ArcSlot c = inc.consumer[arc];
  if (p.kind != ArcSlot::Kind::vertex || c.kind != ArcSlot::Kind::vertex)
    return std::nullopt;
  if (p.index == c.index || !inc.over_at[arc].empty()) return std::nullopt;
  if (d.vertices[p.index].valence() != 3 || d.vertices[c.index].valence() != 3)
    return std::nullopt;
  return SrSite{p.index, c.index};
}

std::vector<VertexEnd> rotated_to(const Vertex& v, int arc) {
  std::vector<VertexEnd> ends = v.ends;
  const auto it = std::find_if(ends.begin(), ends.end(),
                               [&](const VertexEnd& e) { return e.arc == arc; });
  std::rotate(ends.begin(), it, ends.end());
  return ends;
}

MoveResult apply_sr(const Diagram& d, const MoveSpec& m) {
  require_arc(d, m.site);
  const ArcIncidence inc = incidence(d);
  const std::optional<SrSite> site = find_sr(d, inc, m.site);
  require(site.has_value(),
          "arc is not a crossing-free edge between two trivalent vertices");
  // Around the contracted edge the outer ends read a, b (producer side)
  // then c, d (consumer side); the edge is re-expanded to separate
  // {d, a} from {b, c}. The backward move is the inverse of the forward
  // one.
  const auto p = rotated_to(d.vertices[site->producer], m.site);
  const auto c = rotated_to(d.vertices[site->consumer], m.site);
  const VertexEnd& a = p[1];
  const VertexEnd& b = p[2];
  const VertexEnd& cc = c[1];
  const VertexEnd& dd = c[2];
  Diagram out = d;
  if (m.kind == MoveKind::sr_forward) {
    out.vertices[site->producer].ends = {p[0], dd, a};
    out.vertices[site->consumer].ends = {c[0], b, cc};
  } else {
    out.vertices[site->producer].ends = {p[0], b, cc};
    out.vertices[site->consumer].ends = {c[0], dd, a};
  }
  std::vector<int> map(d.arc_count);
  for (int i = 0; i < d.arc_count; ++i) map[i] = i;
  return MoveResult{std::move(out), std::move(map)};
}

MoveResult apply_rotate(const Diagram& d, const MoveSpec& m) {
  vertex_at(d, m.site);
  require(m.direction == 1 || m.direction == -1, "direction must be +1 or -1");
  Diagram out = d;
  auto& ends = out.vertices[m.site].ends;
  if (!ends.empty()) {
    if (m.direction > 0)
      std::rotate(ends.begin(), ends.begin() + 1, ends.end());
    else
      std::rotate(ends.rbegin(), ends.rbegin() + 1, ends.rend());
  }
  std::vector<int> map(d.arc_count);
  for (int i = 0; i < d.arc_count; ++i) map[i] = i;
  return MoveResult{std::move(out), std::move(map)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_insert: return "r1";
    case MoveKind::r2_insert: return "r2";
    case MoveKind::tr1_insert: return "tr1";
    case MoveKind::tr2_slide: return "tr2";
    case MoveKind::sr_forward: return "sr-forward";
    case MoveKind::sr_backward: return "sr-backward";
    case MoveKind::vertex_rotate: return "rotate";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), '_', '-');
  for (MoveKind k : {MoveKind::r1_insert, MoveKind::r2_insert,
                     MoveKind::tr1_insert, MoveKind::tr2_slide,
                     MoveKind::sr_forward, MoveKind::sr_backward,
                     MoveKind::vertex_rotate})
    if (t == to_string(k)) return k;
  if (t == "r1-insert") return MoveKind::r1_insert;
  if (t == "r2-insert") return MoveKind::r2_insert;
  if (t == "tr1-insert") return MoveKind::tr1_insert;
  if (t == "tr2-slide") return MoveKind::tr2_slide;
  if (t == "vertex-rotate") return MoveKind::vertex_rotate;
  throw std::invalid_argument("unknown move kind '" + std::string(text) + "'");
}

std::string describe(const MoveSpec& m) {
  std::ostringstream out;
  out << to_string(m.kind) << '@' << m.site;
  return out.str();
}

MoveResult apply_move(const Diagram& d, const MoveSpec& move) {
  require_valid(d);
  MoveResult result;
  switch (move.kind) {
    case MoveKind::r1_insert: result = apply_r1(d, move); break;
    case MoveKind::r2_insert: result = apply_r2(d, move); break;
    case MoveKind::tr1_insert: result = apply_tr1(d, move); break;
    case MoveKind::tr2_slide: result = apply_tr2(d, move); break;
    case MoveKind::sr_forward:
    case MoveKind::sr_backward: result = apply_sr(d, move); break;
    case MoveKind::vertex_rotate: result = apply_rotate(d, move); break;
  }
  require_valid(result.diagram);
  return result;
}

bool move_applies(const Diagram& d, const MoveSpec& move) {
  try {
    apply_move(d, move);
    return true;
  } catch (const MoveError&) {
    return false;
  }
}

std::vector<MoveSpec> applicable_moves(const Diagram& d, MoveKind kind) {
  require_valid(d);
  std::vector<MoveSpec> out;
  const int vertices = static_cast<int>(d.vertices.size());
  switch (kind) {
    case MoveKind::r1_insert:
      for (int a = 0; a < d.arc_count; ++a)
        for (bool first : {true, false})
          for (int s : {1, -1}) {
            MoveSpec m{kind, a};
            m.over_first = first;
            m.sign = s;
            out.push_back(m);
          }
      break;
    case MoveKind::r2_insert:
      for (int a = 0; a < d.arc_count; ++a)
        for (int b = 0; b < d.arc_count; ++b)
          for (int s : {1, -1}) {
            MoveSpec m{kind, a, b};
            m.sign = s;
            out.push_back(m);
          }
      break;
    case MoveKind::tr1_insert:
      for (int v = 0; v < vertices; ++v)
        if (d.vertices[v].valence() >= 2)
          for (int p = 0; p < d.vertices[v].valence(); ++p)
            for (int side : {0, 1}) {
              MoveSpec m{kind, v};
              m.position = p;
              m.side = side;
              out.push_back(m);
            }
      break;
    case MoveKind::tr2_slide: {
      const ArcIncidence inc = incidence(d);
      for (int v = 0; v < vertices; ++v) {
        const Vertex& vx = d.vertices[v];
        const int k = vx.valence();
        for (int start = 0; start < k; ++start)
          for (int len = 1; len < k; ++len) {
            const auto b1 = block(start, len, k);
            for (int side : {0, 1}) {
              const bool found =
                  side == 0 ? find_strand_over(d, inc, vx, b1).has_value()
                            : find_strand_under(d, inc, vx, b1).has_value();
              if (!found) continue;
              MoveSpec m{kind, v};
              m.position = start;
              m.length = len;
              m.side = side;
              out.push_back(m);
            }
          }
      }
      break;
    }
    case MoveKind::sr_forward:
    case MoveKind::sr_backward: {
      const ArcIncidence inc = incidence(d);
      for (int a = 0; a < d.arc_count; ++a)
        if (find_sr(d, inc, a)) out.push_back(MoveSpec{kind, a});
      break;
    }
    case MoveKind::vertex_rotate:
      for (int v = 0; v < vertices; ++v)
        for (int dir : {1, -1}) {
          MoveSpec m{kind, v};
          m.direction = dir;
          out.push_back(m);
        }
      break;
  }
  return out;
}

Diagram prepare_tr2_site(const Diagram& d, int vertex, int start, int length,
                         int strand, bool strand_over, int tau) {
  require_valid(d);
  const Vertex& vx = vertex_at(d, vertex);
  const int k = vx.valence();
  require(length >= 1 && length < k, "block length out of range");
  require(start >= 0 && start < k, "end position out of range");
  require(tau == 1 || tau == -1, "tau must be +1 or -1");
  if (strand >= 0) {
    require_arc(d, strand);
    require(!incident(vx, strand), "strand is incident to the vertex");
  }
  Editor ed(d);
  const int s = strand >= 0 ? strand : ed.new_arc();
  std::vector<int> order = block(start, length, k);
  if (strand_over) {
    for (int p : order) {
      const auto [far, near] = cut_near(ed, vertex, p);
      cross_end(ed, vertex, p, far, near, s, 1, tau);
    }
  } else {
    if (tau < 0) std::reverse(order.begin(), order.end());
    // The pieces between consecutive crossings must be fresh arcs, so a
    // free loop is closed up through the chain instead of being cut.
    const bool loop = ed.is_free(s);
    int current = s;
    for (std::size_t t = 0; t < order.size(); ++t) {
      const VertexEnd e = ed.diagram().vertices[vertex].ends[order[t]];
      int in = current;
      int out = -1;
      if (loop) {
        out = t + 1 == order.size() ? s : ed.new_arc();
      } else {
        std::tie(in, out) = ed.cut(current, true);
      }
      ed.add_crossing(e.arc, in, out, tau * dir_sign(e.dir));
      current = out;
    }
  }
  Diagram out = ed.finish(d.arc_count).diagram;
  require_valid(out);
  return out;
}

Diagram random_diagram(std::uint64_t seed, int crossings_max, int vertices_max,
                       const std::vector<int>& valences) {
  if (crossings_max < 0 || vertices_max < 0)
    throw PreconditionError("limits must be non-negative");
  std::mt19937_64 rng(seed);
  Diagram d;
  int nv = (vertices_max > 0 && !valences.empty())
               ? uniform(rng, 0, vertices_max)
               : 0;
  std::vector<int> vals;
  for (int v = 0; v < nv; ++v)
    vals.push_back(valences[uniform(rng, 0,
                                    static_cast<int>(valences.size()) - 1)]);
  int total = 0;
  for (int x : vals) total += x;
  if (total % 2 != 0) {
    // Swap one valence for one of the other parity, else drop a vertex.
    bool fixed = false;
    for (int x : valences)
      if (x % 2 != vals.back() % 2) {
        total += x - vals.back();
        vals.back() = x;
        fixed = true;
        break;
      }
    if (!fixed) {
      total -= vals.back();
      vals.pop_back();
    }
  }
  std::vector<std::pair<int, int>> half_edges;
  for (int v = 0; v < static_cast<int>(vals.size()); ++v) {
    d.vertices.push_back(Vertex{std::vector<VertexEnd>(vals[v])});
    for (int p = 0; p < vals[v]; ++p) half_edges.emplace_back(v, p);
  }
  std::shuffle(half_edges.begin(), half_edges.end(), rng);
  for (std::size_t i = 0; i + 1 < half_edges.size(); i += 2) {
    const int arc = d.arc_count++;
    auto [v1, p1] = half_edges[i];
    auto [v2, p2] = half_edges[i + 1];
    if (uniform(rng, 0, 1) == 1) {
      std::swap(v1, v2);
      std::swap(p1, p2);
    }
    d.vertices[v1].ends[p1] = VertexEnd{arc, Direction::out};
    d.vertices[v2].ends[p2] = VertexEnd{arc, Direction::in};
  }
  int loops = d.vertices.empty() ? 1 : 0;
  if (crossings_max + vertices_max > 0) loops += uniform(rng, 0, 1);
  d.arc_count += loops;
  const int crossings = crossings_max > 0 ? uniform(rng, 0, crossings_max) : 0;
  for (int c = 0; c < crossings; ++c) {
    Editor ed(d);
    const int under = uniform(rng, 0, d.arc_count - 1);
    const int over = uniform(rng, 0, d.arc_count - 1);
    const int sign = uniform(rng, 0, 1) == 1 ? 1 : -1;
    const auto [up, down] = ed.cut(under, true);
    ed.add_crossing(over, up, down, sign);
    d = ed.finish(d.arc_count).diagram;
  }
  require_valid(d);
  return d;
}

std::string to_string(FuzzScope scope) {
  switch (scope) {
    case FuzzScope::links: return "links";
    case FuzzScope::trivalent: return "trivalent";
    case FuzzScope::handlebody: return "handlebody";
    case FuzzScope::n_valent: return "n_valent";
  }
  return "?";
}

FuzzScope parse_fuzz_scope(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), '-', '_');
  for (FuzzScope s : {FuzzScope::links, FuzzScope::trivalent,
                      FuzzScope::handlebody, FuzzScope::n_valent})
    if (t == to_string(s)) return s;
  throw std::invalid_argument("unknown scope '" + std::string(text) + "'");
}

std::vector<MoveKind> default_moves(FuzzScope scope) {
  switch (scope) {
    case FuzzScope::links:
      return {MoveKind::r1_insert, MoveKind::r2_insert};
    case FuzzScope::trivalent:
    case FuzzScope::n_valent:
      return {MoveKind::r1_insert, MoveKind::r2_insert, MoveKind::tr1_insert,
              MoveKind::tr2_slide, MoveKind::vertex_rotate};
    case FuzzScope::handlebody:
      return {MoveKind::r1_insert,  MoveKind::r2_insert,
              MoveKind::tr1_insert, MoveKind::tr2_slide,
              MoveKind::sr_forward, MoveKind::sr_backward,
              MoveKind::vertex_rotate};
  }
  return {};
}

int FuzzReport::mismatches() const {
  return static_cast<int>(std::count_if(
      trials.begin(), trials.end(), [](const FuzzTrial& t) { return !t.ok(); }));
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  for (const FuzzTrial& t : trials)
    out << "trial " << t.index << " seed " << t.seed << " move "
        << describe(t.move) << " before " << t.count_before << " after "
        << t.count_after << ' ' << (t.ok() ? "OK" : "FAIL") << '\n';
  return out.str();
}

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

AxiomReport scope_report(const SystemData& sys, FuzzScope scope,
                         const std::vector<int>& arities) {
  sys.check_shape();
  AxiomReport report;
  const AssociatedResult assoc = associated_quandle(sys);
  report.merge(assoc.report, "associated.");
  if (scope == FuzzScope::links) return report;
  if (scope == FuzzScope::n_valent) {
    if (arities.empty())
      throw PreconditionError("the n_valent scope needs at least one arity");
    report.merge(validate_family(sys, FamilySpec(FamilyKind::n_compatible,
                                                 arities)),
                 "n_compatible.");
    return report;
  }
  report.merge(validate_family(sys, FamilyKind::trivalent_compatible),
               "trivalent_compatible.");
  if (sys.has_rho() && assoc.report.valid())
    report.merge(validate_involution(assoc.quandle.table, flattened_rho(sys)),
                 "good_involution.");
  if (scope == FuzzScope::handlebody)
    report.merge(validate_family(sys, FamilyKind::associative_composition),
                 "associative_composition.");
  return report;
}

namespace {

std::vector<int> scope_valences(FuzzScope scope,
                                const std::vector<int>& arities) {
  if (scope == FuzzScope::links) return {};
  if (scope == FuzzScope::n_valent) {
    std::vector<int> out;
    for (int n : arities) out.push_back(n + 1);
    return out;
  }
  return {3};
}

FuzzTrial run_trial(const SystemData& sys, const FuzzOptions& options,
                    const std::vector<MoveKind>& kinds,
                    const std::vector<int>& valences, int index) {
  FuzzTrial trial;
  trial.index = index;
  trial.seed = trial_seed(options.seed, index);
  std::mt19937_64 rng(trial.seed);
  const int vertices_max =
      options.scope == FuzzScope::links ? 0 : options.vertices_max;
  Diagram after;
  bool done = false;
  for (int attempt = 0; attempt < 64 && !done; ++attempt) {
    const Diagram d =
        random_diagram(rng(), options.crossings_max, vertices_max, valences);
    const MoveKind kind =
        kinds[uniform(rng, 0, static_cast<int>(kinds.size()) - 1)];
    if (kind == MoveKind::tr2_slide) {
      // Build a site first, then slide it.
      if (d.vertices.empty()) continue;
      const int v = uniform(rng, 0, static_cast<int>(d.vertices.size()) - 1);
      const Vertex& vx = d.vertices[v];
      const int k = vx.valence();
      if (k < 2) continue;
      const int start = uniform(rng, 0, k - 1);
      const int length = uniform(rng, 1, k - 1);
      const bool strand_over = uniform(rng, 0, 1) == 0;
      const int tau = uniform(rng, 0, 1) == 0 ? 1 : -1;
      std::vector<int> strands = {-1};
      for (int a = 0; a < d.arc_count; ++a)
        if (!incident(vx, a)) strands.push_back(a);
      const int strand =
          strands[uniform(rng, 0, static_cast<int>(strands.size()) - 1)];
      trial.before =
          prepare_tr2_site(d, v, start, length, strand, strand_over, tau);
      trial.move = MoveSpec{kind, v};
      trial.move.position = start;
      trial.move.length = length;
      trial.move.side = strand_over ? 0 : 1;
      after = apply_move(trial.before, trial.move).diagram;
      done = true;
      continue;
    }
    const std::vector<MoveSpec> options_here = applicable_moves(d, kind);
    if (options_here.empty()) continue;
    trial.before = d;
    trial.move = options_here[uniform(
        rng, 0, static_cast<int>(options_here.size()) - 1)];
    after = apply_move(d, trial.move).diagram;
    done = true;
  }
  if (!done) {
    // Every diagram has an arc, so a kink is always available.
    trial.before = random_diagram(rng(), options.crossings_max, vertices_max,
                                  valences);
    trial.move = MoveSpec{MoveKind::r1_insert, 0};
    after = apply_move(trial.before, trial.move).diagram;
  }
  trial.count_before = count_colourings(trial.before, sys);
  trial.count_after = count_colourings(after, sys);
  return trial;
}

}  // namespace

FuzzReport fuzz_invariance(const SystemData& sys, const FuzzOptions& options) {
  if (options.trials < 0) throw PreconditionError("trials must be >= 0");
  if (options.check_preconditions) {
    const AxiomReport report =
        scope_report(sys, options.scope, options.arities);
    if (!report.valid())
      throw PreconditionError("system does not satisfy the " +
                              to_string(options.scope) +
                              " hypotheses:\n" + report.to_text());
  }
  const std::vector<MoveKind> kinds =
      options.moves.empty() ? default_moves(options.scope) : options.moves;
  if (kinds.empty()) throw PreconditionError("no moves to fuzz");
  std::vector<int> arities = options.arities;
  if (options.scope == FuzzScope::n_valent && arities.empty())
    for (const auto& [arity, table] : sys.gamma) arities.push_back(arity);
  const std::vector<int> valences = scope_valences(options.scope, arities);
  FuzzReport report;
  report.trials.resize(options.trials);
  const int jobs = std::max(1, std::min(options.jobs, options.trials));
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](int w) {
    try {
      for (int i = w; i < options.trials; i += jobs)
        report.trials[i] = run_trial(sys, options, kinds, valences, i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

}  // namespace qsys
