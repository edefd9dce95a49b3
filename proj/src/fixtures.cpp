#include "qsys/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsys/system_io.hpp"

namespace qsys {

namespace {

struct NamedText {
  const char* name;
  const char* text;
};

// Arc names in the comments follow the generator names used when the
// groups of these graphs are written down by hand.
const NamedText kDiagrams[] = {
    {"unknot", "arcs 1\n"},
    {"trefoil",
     "arcs 3\n"
     "crossing over=0 under_in=1 under_out=2 sign=+\n"
     "crossing over=1 under_in=2 under_out=0 sign=+\n"
     "crossing over=2 under_in=0 under_out=1 sign=+\n"},
    {"hopf",
     "arcs 2\n"
     "crossing over=1 under_in=0 under_out=0 sign=+\n"
     "crossing over=0 under_in=1 under_out=1 sign=+\n"},
    {"theta",
     "arcs 3\n"
     "vertex ends=0:in,1:in,2:out\n"
     "vertex ends=2:in,1:out,0:out\n"},
    {"mlf",
     "# man with linked fingers: arcs a=0 b=1 c=2 d=3 f=4\n"
     "# d = ab, c = bf, ac = cd, cd = df\n"
     "arcs 5\n"
     "crossing over=2 under_in=0 under_out=3 sign=+\n"
     "crossing over=3 under_in=2 under_out=4 sign=+\n"
     "vertex ends=0:out,3:in,1:out\n"
     "vertex ends=1:in,4:in,2:out\n"},
    {"muf",
     "# man with unlinked fingers: arcs a=0 b=1 c=2\n"
     "# a b^-1 a^-1 = c^-1 b c = 1\n"
     "arcs 3\n"
     "vertex ends=0:in,1:out,0:out\n"
     "vertex ends=2:out,1:in,2:in\n"},
    {"mwf",
     "# man with watch and linked fingers:\n"
     "# arcs a=0 b=1 c=2 d=3 f=4 g=5 h=6 (h is the watch)\n"
     "# d = ab, c = gf, ac = cd, cd = df, bh = hg, hb = bh\n"
     "arcs 7\n"
     "crossing over=2 under_in=0 under_out=3 sign=+\n"
     "crossing over=3 under_in=2 under_out=4 sign=+\n"
     "crossing over=6 under_in=1 under_out=5 sign=+\n"
     "crossing over=1 under_in=6 under_out=6 sign=+\n"
     "vertex ends=0:out,3:in,1:out\n"
     "vertex ends=5:in,4:in,2:out\n"},
    {"mwuf",
     "# man with watch and unlinked fingers:\n"
     "# arcs a=0 b=1 c=2, and the watch h=3 as a separate circle\n"
     "arcs 4\n"
     "vertex ends=0:in,1:in,0:out\n"
     "vertex ends=1:out,2:in,2:out\n"},
    {"athlete-happy",
     "# a handcuff graph whose two loops p (arcs 0,1) and q (arcs 2,3)\n"
     "# each hook a hoop h (arcs 4,5); arc 6 is the body\n"
     "arcs 7\n"
     "crossing over=4 under_in=0 under_out=1 sign=+\n"
     "crossing over=1 under_in=5 under_out=4 sign=+\n"
     "crossing over=5 under_in=2 under_out=3 sign=+\n"
     "crossing over=3 under_in=4 under_out=5 sign=+\n"
     "vertex ends=0:out,1:in,6:out\n"
     "vertex ends=6:in,3:in,2:out\n"},
    {"athlete-unhappy",
     "# as athlete-happy, but the loop q (arc 2) has let go of the hoop h\n"
     "# (arc 3); arc 4 is the body\n"
     "arcs 5\n"
     "crossing over=3 under_in=0 under_out=1 sign=+\n"
     "crossing over=1 under_in=3 under_out=3 sign=+\n"
     "vertex ends=0:out,1:in,4:out\n"
     "vertex ends=4:in,2:in,2:out\n"},
};

template <std::size_t N>
const char* lookup(const NamedText (&table)[N], std::string_view name,
                   const char* what) {
  for (const NamedText& t : table)
    if (name == t.name) return t.text;
  throw std::out_of_range(std::string("unknown ") + what + " '" +
                          std::string(name) + "'");
}

std::string strip_prefix(std::string_view ref, std::string_view prefix,
                         bool* matched) {
  *matched = ref.substr(0, prefix.size()) == prefix;
  return std::string(*matched ? ref.substr(prefix.size()) : ref);
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const NamedText& t : kDiagrams) out.emplace_back(t.name);
  return out;
}

std::string fixture_text(std::string_view name) {
  return lookup(kDiagrams, name, "fixture");
}

Diagram fixture_diagram(std::string_view name) {
  return parse_diagram(fixture_text(name));
}

SystemData t3r3z2_system() {
  return g_family_system(cyclic_group(2),
                         {trivial_quandle(3), dihedral_quandle(3)});
}

SystemData t2t2z2_system() {
  return g_family_system(cyclic_group(2),
                         {trivial_quandle(2), trivial_quandle(2)});
}

SystemData broken_cond4_system() {
  SystemData d = t3r3z2_system();
  for (int& v : d.f) v = 1;
  for (auto& r : d.rho)
    for (int g = 0; g < d.g_size; ++g) r[g] = g;
  return d;
}

SystemData conj_s3_system() {
  return g_family_system(symmetric_group(3),
                         std::vector<OperationTable>(6, trivial_quandle(1)));
}

AxetData axet_s3() {
  AxetData a{cyclic_group(2), symmetric_group(3), 3, {}, {}};
  // symmetric_group composes "first g, then h", so g acts on the left
  // through the inverse of its permutation.
  for (int g = 0; g < a.g_group.size(); ++g) {
    const std::vector<int> p = symmetric_group_permutation(3, g);
    std::vector<int> inverse(3);
    for (int i = 0; i < 3; ++i) inverse[p[i]] = i;
    a.action.push_back(inverse);
  }
  for (int x = 0; x < 3; ++x) {
    std::vector<int> swap = {0, 1, 2};
    std::swap(swap[(x + 1) % 3], swap[(x + 2) % 3]);
    a.tau.push_back({a.g_group.identity(), symmetric_group_element(swap)});
  }
  return a;
}

std::vector<std::string> system_names() {
  return {"t3r3z2", "t2t2z2", "broken-cond4", "conj-s3", "axet-s3"};
}

std::string system_text(std::string_view name) {
  if (name == "t3r3z2") return serialize_system(t3r3z2_system());
  if (name == "t2t2z2") return serialize_system(t2t2z2_system());
  if (name == "broken-cond4") return serialize_system(broken_cond4_system());
  if (name == "conj-s3") return serialize_system(conj_s3_system());
  if (name == "axet-s3") return serialize_axet(axet_s3());
  throw std::out_of_range("unknown system '" + std::string(name) + "'");
}

AxetData fixture_axet(std::string_view name) {
  if (name == "axet-s3") return axet_s3();
  throw std::out_of_range("unknown axet '" + std::string(name) + "'");
}

SystemData fixture_system(std::string_view name) {
  if (name == "axet-s3") {
    AxetConversion c = axet_to_system(axet_s3());
    if (!c.system) throw std::logic_error("bundled axet does not convert");
    return *c.system;
  }
  return parse_system(system_text(name));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_diagram_source(std::string_view ref) {
  bool bundled = false;
  const std::string name = strip_prefix(ref, "fixtures:", &bundled);
  return bundled ? fixture_text(name) : read_file(name);
}

std::string read_system_source(std::string_view ref) {
  bool bundled = false;
  const std::string name = strip_prefix(ref, "systems:", &bundled);
  return bundled ? system_text(name) : read_file(name);
}

}  // namespace qsys
