#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qsys/parse_error.hpp"
#include "qsys/systems.hpp"

namespace qsys {

// System file:
//   system
//   X <m>
//   G <n>
//   group identity=<k> [inverse=<i0,i1,...>]   (optional; n rows follow)
//   otimes        (n rows)
//   oplus         (optional; n rows)
//   f             (n rows; row g, column h is f(g,h))
//   star <g>      (m rows; one block per g)
//   rho <x> = <permutation of 0..n-1>           (optional; one line per x)
//   gamma <k>     (optional; n^(k-1) rows of n entries, row-major)
// When a group block is present, missing otimes / f / oplus / rho default
// to conjugation, f(g,h) = h, the group product and inversion.
SystemData parse_system(std::string_view text);
std::string serialize_system(const SystemData& data);

// Axet file:
//   axet
//   X <m>
//   S <k> identity=<e>   (k rows)
//   G <n> identity=<e>   (n rows)
//   action <g> = <permutation of X>   (one line per g)
//   tau                  (m rows of k entries in G)
AxetData parse_axet(std::string_view text);
std::string serialize_axet(const AxetData& axet);

// Dispatches on the header line.
std::variant<SystemData, AxetData> parse_system_or_axet(std::string_view text);

}  // namespace qsys
