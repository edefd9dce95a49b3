#pragma once

#include <cstdint>
#include <vector>

#include "qsys/diagram.hpp"
#include "qsys/report.hpp"
#include "qsys/systems.hpp"

namespace qsys {

// assignment[arc] is an element index of the associated quandle, i.e.
// x * g_size + g for the colour (x, g).
struct Colouring {
  std::vector<int> assignment;

  bool operator==(const Colouring&) const = default;
};

enum class CountMode { all, generating };

// The vertex rule on its own. `colours` are associated-quandle indices of
// the ends in listed order: all X-parts must agree (call it x); with
// h_i = g_i for an in-end and rho_x(g_i) for an out-end, it requires
// Gamma(h_1, ..., h_{v-1}) = rho_x(h_v). Throws MissingFieldError when the
// system lacks rho or a Gamma table of arity v-1.
bool vertex_rule_holds(const SystemData& sys,
                       const std::vector<Direction>& dirs,
                       const std::vector<int>& colours);

// Axiom names: range (arc) | crossing (crossing) | vertex-x (vertex) |
// vertex (vertex).
AxiomReport verify_colouring(const Diagram& d, const SystemData& sys,
                             const Colouring& c);

// Exact number of proper colourings. In generating mode only colourings
// whose colours generate the whole associated quandle are counted. `jobs`
// splits the search by the first branching arc; the count does not depend
// on it.
std::uint64_t count_colourings(const Diagram& d, const SystemData& sys,
                               CountMode mode = CountMode::all, int jobs = 1);

// The first `cap` proper colourings in search order.
std::vector<Colouring> enumerate_colourings(const Diagram& d,
                                            const SystemData& sys,
                                            std::size_t cap);

// Whether the colours used by `c` generate the whole associated quandle.
bool colouring_generates(const SystemData& sys, const Colouring& c);

}  // namespace qsys
