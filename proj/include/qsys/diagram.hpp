#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsys/parse_error.hpp"
#include "qsys/report.hpp"

namespace qsys {

enum class Direction { in, out };

// An undercrossing. The under-strand runs from under_in to under_out and
// passes beneath `over`. sign is +1 or -1; its meaning is operational:
// at a positive crossing colour(under_out) = colour(under_in) . colour(over),
// at a negative one colour(under_in) = colour(under_out) . colour(over).
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1;

  bool operator==(const Crossing&) const = default;
};

struct VertexEnd {
  int arc = 0;
  Direction dir = Direction::in;  // in: the arc flows into the vertex

  bool operator==(const VertexEnd&) const = default;
};

// A graph vertex; `ends` lists the incident arc ends in cyclic order.
struct Vertex {
  std::vector<VertexEnd> ends;

  int valence() const { return static_cast<int>(ends.size()); }
  bool operator==(const Vertex&) const = default;
};

// Arcs are numbered 0..arc_count-1. Every arc runs from exactly one
// producer (a crossing's under_out slot or a vertex out-end) to exactly one
// consumer (an under_in slot or a vertex in-end), or has neither and is a
// free loop.
struct Diagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  std::vector<Vertex> vertices;

  bool operator==(const Diagram&) const = default;
};

// Where an arc starts or ends.
struct ArcSlot {
  enum class Kind { none, crossing, vertex };
  Kind kind = Kind::none;
  int index = -1;     // crossing or vertex index
  int position = -1;  // end position at a vertex

  bool operator==(const ArcSlot&) const = default;
};

struct ArcIncidence {
  std::vector<ArcSlot> producer;
  std::vector<ArcSlot> consumer;
  std::vector<std::vector<int>> over_at;  // crossings each arc passes over
};

// Computes producer/consumer slots; throws PreconditionError when an arc
// has two producers or two consumers or an index is out of range.
ArcIncidence incidence(const Diagram& d);

// Record syntax:
//   arcs <N>
//   crossing over=<a> under_in=<b> under_out=<c> sign=<+|->
//   vertex ends=<a>:<in|out>,<b>:<in|out>,...
//   loop <a>
// '#' starts a comment line.
Diagram parse_diagram(std::string_view text);

// Axiom names: arc-range (record kind, record index) | producer (arc) |
// consumer (arc) | dangling (arc) | valence (vertex) | sign (crossing) |
// loop-crossing (crossing).
AxiomReport validate_diagram(const Diagram& d);

// Canonical text: the arcs line, then crossings and vertices in stored
// order. Free loops need no record of their own. Throws PreconditionError
// if the diagram is invalid.
std::string serialize_diagram(const Diagram& d);

struct EdgeEndpoint {
  int vertex = -1;
  int position = -1;

  bool operator==(const EdgeEndpoint&) const = default;
};

// One graph edge: arcs in flow order, chained through undercrossings.
// A closed loop has no endpoints; otherwise endpoints are (start, end).
struct Edge {
  std::vector<int> arcs;
  std::vector<EdgeEndpoint> endpoints;

  bool operator==(const Edge&) const = default;
};

// Edges leaving vertex out-ends in (vertex, position) order, then closed
// loops ordered by their smallest arc, each starting at that arc.
std::vector<Edge> compute_edges(const Diagram& d);

// Removes the listed edges (indices into compute_edges(d)). Crossings whose
// under-strand dies disappear, crossings whose over-arc dies are erased and
// their under arcs merged, vertices left with two ends are smoothed (the
// orientation of one side is reversed when both ends point the same way)
// and vertices left with no ends disappear. Throws PreconditionError when a
// vertex keeps one end or more than two, or an index is not an edge.
Diagram delete_edges(const Diagram& d, const std::vector<int>& edges);

// Reverses the flow of one edge: vertex end directions flip, crossings
// where it is the under-strand swap under_in/under_out and change sign,
// crossings where it is the over-strand change sign.
Diagram reverse_edge(const Diagram& d, int edge);

// Reverses the orientation of every arc with flip[a] set. The set must be
// closed under under-strand continuation (an undercrossing's in and out
// arcs are flipped together).
Diagram reverse_arcs(const Diagram& d, const std::vector<bool>& flip);

// Number of connected strands when the diagram has no vertices: arcs joined
// through undercrossings. component_of[a] is the strand containing arc a,
// numbered by smallest arc.
std::vector<int> link_components(const Diagram& d, int* count = nullptr);

// Whether two diagrams agree after relabelling arcs and rotating vertex end
// lists; crossing and vertex order are significant.
bool equivalent_up_to_relabelling(const Diagram& a, const Diagram& b);

}  // namespace qsys
