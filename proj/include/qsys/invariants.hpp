#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsys/algebra.hpp"
#include "qsys/diagram.hpp"
#include "qsys/systems.hpp"

namespace qsys {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Generators 0..generator_count-1; each relator is a word equal to 1.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;

  bool operator==(const GroupPresentation&) const = default;
};

// One generator per arc. A positive crossing gives over^-1 in over out^-1,
// a negative one over in over^-1 out^-1 (in/out being the under arcs); a
// vertex gives the product of its ends in listed order, with out-ends
// inverted, so that a vertex (a:in, b:in, d:out) reads d = ab.
GroupPresentation wirtinger_presentation(const Diagram& d);

// Number of assignments of generators to elements of g that satisfy every
// relator, i.e. the number of homomorphisms from the presented group.
std::uint64_t group_hom_count(const GroupPresentation& p, const GroupTable& g);

// The groups Z2, Z3, S3, Z4 and D4 with their names.
struct PanelGroup {
  std::string name;
  GroupTable group;
};
std::vector<PanelGroup> fingerprint_panel();

// Homomorphism counts into each panel group. The count of homomorphisms
// from a group is a property of the group alone, so the raw counts already
// agree for any two presentations of isomorphic groups; no rescaling by the
// number of generators is applied.
std::vector<std::uint64_t> hom_fingerprint(const GroupPresentation& p,
                                           const std::vector<PanelGroup>& panel);

// Syntax:
//   gens <n>
//   rel <signed generator indices, e.g. +0 -1 +0 +2>
GroupPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const GroupPresentation& p);

// twice[i][j] is the signed count of crossings between strands i and j,
// i != j, which is twice the linking number for a classical diagram.
struct LinkingMatrix {
  int component_count = 0;
  std::vector<std::vector<int>> twice;

  // Throws PreconditionError when the signed count is odd (possible only
  // for virtual diagrams).
  int lk(int i, int j) const;
};

// Throws PreconditionError when the diagram has vertices.
LinkingMatrix linking_matrix(const Diagram& d);

// For every choice of a pair of ends at each trivalent vertex, the edges not
// chosen at some endpoint are deleted; the choices leaving every vertex with
// exactly two ends contribute their link diagram. Choices are enumerated
// with vertex 0 as the most significant digit and, per vertex, the dropped
// end position ascending. Throws PreconditionError on non-trivalent
// vertices.
std::vector<Diagram> kauffman_constituents(const Diagram& d);

// Per constituent: the absolute linking numbers |lk(i,j)|, i < j, sorted
// (orientations of smoothed constituents are arbitrary, so only absolute
// values are meaningful), or the single colouring count when a system is
// given. The outer list is sorted.
using KauffmanSummary = std::vector<std::vector<std::uint64_t>>;
KauffmanSummary kauffman_summary(const Diagram& d,
                                 const SystemData* colour_system = nullptr);

std::string summary_to_text(const KauffmanSummary& summary);

}  // namespace qsys
