#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "qsys/fixtures.hpp"
#include "qsys/system_io.hpp"

using namespace qsys;

TEST_CASE("bundled names resolve") {
  CHECK(fixture_names().size() == 10);
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    CHECK(parse_diagram(fixture_text(name)) == fixture_diagram(name));
    CHECK(read_diagram_source("fixtures:" + name) == fixture_text(name));
  }
  for (const std::string& name : system_names()) {
    CAPTURE(name);
    CHECK(read_system_source("systems:" + name) == system_text(name));
    CHECK(fixture_system(name).x_size > 0);
  }
  CHECK_THROWS_AS(fixture_text("nonesuch"), std::out_of_range);
  CHECK_THROWS_AS(read_system_source("systems:nonesuch"), std::out_of_range);
}

TEST_CASE("plain paths read files") {
  const std::string path = "qsys_fixture_test.txt";
  {
    std::ofstream out(path);
    out << "arcs 2\n";
  }
  CHECK(read_diagram_source(path) == "arcs 2\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_diagram_source("/nonexistent/file"), std::runtime_error);
}

TEST_CASE("broken control keeps the fw axioms") {
  const SystemData d = broken_cond4_system();
  CHECK(validate_family(d, FamilyKind::fw_system).valid());
  const AxiomReport r = validate_family(d, FamilyKind::trivalent_compatible);
  CHECK(r.has("condition-4"));
  CHECK(associated_quandle(d).report.valid());
}

TEST_CASE("the axet fixture converts") {
  const AxetData a = fixture_axet("axet-s3");
  CHECK(a.x_size == 3);
  // tau_x of the generator fixes x and is a transposition.
  for (int x = 0; x < 3; ++x) {
    const int t = a.tau[x][1];
    CHECK(a.action[t][x] == x);
    CHECK(t != a.g_group.identity());
    CHECK(a.g_group.mul(t, t) == a.g_group.identity());
  }
  CHECK(fixture_system("axet-s3") == *axet_to_system(a).system);
}
