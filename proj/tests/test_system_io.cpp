#include <variant>

#include "doctest.h"
#include "qsys/fixtures.hpp"
#include "qsys/system_io.hpp"

using namespace qsys;

TEST_CASE("bundled system files round-trip") {
  for (const std::string& name : {"t3r3z2", "t2t2z2", "broken-cond4",
                                  "conj-s3"}) {
    CAPTURE(name);
    const std::string text = system_text(name);
    const SystemData d = parse_system(text);
    CHECK(serialize_system(d) == text);
    CHECK(parse_system(serialize_system(d)) == d);
  }
  CHECK(parse_system(system_text("t3r3z2")) == t3r3z2_system());
  CHECK(parse_system(system_text("broken-cond4")) == broken_cond4_system());
}

TEST_CASE("a group block supplies the G-family defaults") {
  const std::string text =
      "system\n"
      "X 3\n"
      "G 2\n"
      "group identity=0\n"
      "0 1\n"
      "1 0\n"
      "star 0\n"
      "0 0 0\n1 1 1\n2 2 2\n"
      "star 1\n"
      "0 2 1\n2 1 0\n1 0 2\n";
  CHECK(parse_system(text) == t3r3z2_system());
}

TEST_CASE("gamma blocks round-trip") {
  const GammaResult g = gamma_from_oplus(t3r3z2_system(), 3);
  const std::string text = serialize_system(g.system);
  CHECK(text.find("gamma 3\n") != std::string::npos);
  CHECK(parse_system(text) == g.system);
}

TEST_CASE("axet files round-trip") {
  const std::string text = system_text("axet-s3");
  const AxetData a = parse_axet(text);
  CHECK(serialize_axet(a) == text);
  CHECK(a.x_size == 3);
  CHECK(a.s_group.size() == 2);
  CHECK(a.g_group.size() == 6);
  CHECK(serialize_axet(axet_s3()) == text);
}

TEST_CASE("dispatch on the header") {
  CHECK(std::holds_alternative<AxetData>(
      parse_system_or_axet(system_text("axet-s3"))));
  CHECK(std::holds_alternative<SystemData>(
      parse_system_or_axet(system_text("t2t2z2"))));
  CHECK_THROWS_AS(parse_system_or_axet("magma 2\n0 0\n1 1\n"), ParseError);
}

TEST_CASE("malformed system files") {
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("system\nX 2\n"), ParseError);
  // Without a group block the otimes table is mandatory.
  CHECK_THROWS_AS(parse_system("system\nX 1\nG 1\nf\n0\nstar 0\n0\n"),
                  ParseError);
  try {
    parse_system("system\nX 1\nG 2\ngroup identity=0\n0 1\n1 0\nstar 0\n0\n"
                 "star 1\n3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 10);
  }
}
