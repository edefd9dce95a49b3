#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsys/diagram.hpp"
#include "qsys/systems.hpp"

namespace qsys {

enum class MoveKind {
  r1_insert,
  r2_insert,
  tr1_insert,
  tr2_slide,
  sr_forward,
  sr_backward,
  vertex_rotate,
};

std::string to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

// A move and where to apply it.
//   r1_insert      site = arc; over_first chooses which side of the kink
//                  passes over; sign is the crossing sign.
//   r2_insert      site = arc passing under, other = arc passing over (may
//                  equal site); the two crossings get signs sign, -sign.
//   tr1_insert     site = vertex, position = i; the ends at i and i+1 trade
//                  places, one passing under the other (side 0: end i goes
//                  under, side 1: end i+1 goes under).
//   tr2_slide      site = vertex; the ends position .. position+length-1
//                  (cyclically) all cross one strand, passing under it
//                  (side 0) or over it (side 1); the strand is slid across
//                  the vertex to the complementary ends.
//   sr_forward / sr_backward
//                  site = an arc forming a whole edge between two distinct
//                  trivalent vertices; the edge is contracted and expanded
//                  in the transverse direction (the two are inverse).
//   vertex_rotate  site = vertex, direction = +1 or -1 rotates its end list.
// mirror toggles the signs of inserted crossings (for tr1_insert it selects
// the opposite side; it has no effect on tr2_slide and sr moves).
struct MoveSpec {
  MoveKind kind = MoveKind::r1_insert;
  int site = 0;
  int other = 0;
  int position = 0;
  int length = 1;
  int sign = 1;
  int side = 0;
  int direction = 1;
  bool over_first = true;
  bool mirror = false;
};

std::string describe(const MoveSpec& move);

// arc_map[a] is the index in the result of arc a of the input, or -1 when
// the arc was absorbed into a neighbour; arcs of the result beyond the
// image are new.
struct MoveResult {
  Diagram diagram;
  std::vector<int> arc_map;
};

// Thrown when a move does not apply at the requested site.
class MoveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

MoveResult apply_move(const Diagram& d, const MoveSpec& move);

// Whether apply_move would succeed.
bool move_applies(const Diagram& d, const MoveSpec& move);

// Every applicable spec of the given kind (signs, sides and directions
// enumerated; tr2 sites of both kinds).
std::vector<MoveSpec> applicable_moves(const Diagram& d, MoveKind kind);

// Builds a tr2 site at vertex `vertex`: the ends start .. start+length-1
// are made to cross `strand` (an arc not incident to the vertex, or -1 for
// a fresh unknotted circle). With strand_over the ends pass under the
// strand; otherwise the strand passes under the ends, in listed order when
// tau = +1 and in reverse order when tau = -1.
Diagram prepare_tr2_site(const Diagram& d, int vertex, int start, int length,
                         int strand, bool strand_over, int tau);

// Reproducible random diagram: vertices with valences drawn from
// `valences`, edges paired at random and oriented at random, possibly some
// extra free circles, then up to crossings_max random crossings.
Diagram random_diagram(std::uint64_t seed, int crossings_max, int vertices_max,
                       const std::vector<int>& valences = {3});

enum class FuzzScope { links, trivalent, handlebody, n_valent };
std::string to_string(FuzzScope scope);
FuzzScope parse_fuzz_scope(std::string_view text);

// The moves fuzzed by default in each scope.
std::vector<MoveKind> default_moves(FuzzScope scope);

struct FuzzOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<MoveKind> moves;  // empty: default_moves(scope)
  FuzzScope scope = FuzzScope::links;
  std::vector<int> arities;     // n_valent: Gamma arities to exercise
  int crossings_max = 3;
  int vertices_max = 2;
  int jobs = 1;
  // Refuse to run when the system does not satisfy the hypotheses of the
  // scope. Disabling this is only useful for negative controls.
  bool check_preconditions = true;
};

struct FuzzTrial {
  int index = 0;
  std::uint64_t seed = 0;
  MoveSpec move;
  Diagram before;
  std::uint64_t count_before = 0;
  std::uint64_t count_after = 0;

  bool ok() const { return count_before == count_after; }
};

struct FuzzReport {
  std::vector<FuzzTrial> trials;

  int mismatches() const;
  // One line per trial:
  //   trial <i> seed <s> move <kind>@<site> before <n> after <m> <OK|FAIL>
  std::string to_text() const;
};

// Per-trial seed derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, int trial);

// Throws PreconditionError (when checking is enabled) if `sys` does not
// satisfy the scope's hypotheses.
FuzzReport fuzz_invariance(const SystemData& sys, const FuzzOptions& options);

// Validates `sys` for the scope; the report is empty when the scope's
// invariance theorem applies.
AxiomReport scope_report(const SystemData& sys, FuzzScope scope,
                         const std::vector<int>& arities = {});

}  // namespace qsys
