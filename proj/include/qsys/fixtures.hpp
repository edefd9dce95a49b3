#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsys/diagram.hpp"
#include "qsys/systems.hpp"

namespace qsys {

// Bundled diagrams: unknot, trefoil, hopf, theta, mlf, muf, mwf, mwuf,
// athlete-happy, athlete-unhappy.
std::vector<std::string> fixture_names();
// Diagram file text of a bundled diagram; throws std::out_of_range.
std::string fixture_text(std::string_view name);
Diagram fixture_diagram(std::string_view name);

// Bundled systems: t3r3z2, t2t2z2, broken-cond4, conj-s3 (system files)
// and axet-s3 (an axet file).
std::vector<std::string> system_names();
std::string system_text(std::string_view name);
// The system itself, with axets converted through axet_to_system.
SystemData fixture_system(std::string_view name);
AxetData fixture_axet(std::string_view name);

// The G-family over Z2 on three points with *_0 trivial and *_1 dihedral.
SystemData t3r3z2_system();
// The G-family over Z2 on two points with both operations trivial.
SystemData t2t2z2_system();
// t3r3z2 with f constantly the non-unit and rho the identity: it keeps the
// fw axioms and fails compatibility condition 4.
SystemData broken_cond4_system();
// A singleton X over S3, i.e. Conj(S3) coloured through its group part.
SystemData conj_s3_system();
// S = Z2, G = S3 acting on {0,1,2}; tau_x sends the generator of S to the
// transposition fixing x.
AxetData axet_s3();

// Resolves "fixtures:<name>" to a bundled diagram text and anything else to
// the contents of a file. Throws std::runtime_error on unreadable files and
// std::out_of_range on unknown names.
std::string read_diagram_source(std::string_view ref);
// Same for "systems:<name>".
std::string read_system_source(std::string_view ref);
std::string read_file(const std::string& path);

}  // namespace qsys
