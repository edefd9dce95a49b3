#include "doctest.h"
#include "qsys/diagram.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/invariants.hpp"
#include "qsys/moves.hpp"

using namespace qsys;

namespace {

// The edge joining two different vertices; the fixtures have exactly one.
int connecting_edge(const Diagram& d) {
  const std::vector<Edge> edges = compute_edges(d);
  int found = -1;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].endpoints.size() == 2 &&
        edges[e].endpoints[0].vertex != edges[e].endpoints[1].vertex) {
      REQUIRE(found == -1);
      found = e;
    }
  REQUIRE(found >= 0);
  return found;
}

}  // namespace

TEST_CASE("parsing the basic diagrams") {
  const Diagram unknot = parse_diagram("arcs 1\n");
  CHECK(unknot.arc_count == 1);
  CHECK(unknot.crossings.empty());
  CHECK(unknot.vertices.empty());

  const Diagram trefoil = fixture_diagram("trefoil");
  CHECK(trefoil.arc_count == 3);
  REQUIRE(trefoil.crossings.size() == 3);
  CHECK(trefoil.crossings[0] == Crossing{0, 1, 2, 1});
  CHECK(trefoil.crossings[2] == Crossing{2, 0, 1, 1});

  const Diagram theta = fixture_diagram("theta");
  CHECK(theta.vertices.size() == 2);
  CHECK(theta.crossings.empty());
  CHECK(validate_diagram(theta).valid());

  const Diagram loop = parse_diagram("arcs 2\nloop 1\nloop 0\n");
  CHECK(loop.arc_count == 2);
  CHECK(validate_diagram(loop).valid());
}

TEST_CASE("every bundled diagram is valid") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    CHECK(validate_diagram(fixture_diagram(name)).valid());
  }
}

TEST_CASE("validation witnesses") {
  Diagram d = fixture_diagram("trefoil");
  d.crossings[1].under_in = 1;  // arc 1 is now consumed twice
  const AxiomReport r = validate_diagram(d);
  CHECK_FALSE(r.valid());
  bool found = false;
  for (const Violation& v : r.violations())
    if (v.axiom == "consumer" && v.witness == std::vector<int>{1})
      found = true;
  CHECK(found);

  Diagram range = fixture_diagram("trefoil");
  range.crossings[0].over = 9;
  CHECK(validate_diagram(range).has("arc-range"));

  Diagram sign = fixture_diagram("trefoil");
  sign.crossings[0].sign = 0;
  CHECK(validate_diagram(sign).has("sign"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 2\ncrossing over=0 under_in=1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 2\nvertex ends=0:sideways\n"),
                  ParseError);
  try {
    parse_diagram("arcs 3\n# comment\ncrossing over=0 under_in=1 under_out=2 "
                  "sign=*\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("canonical serialization") {
  CHECK(serialize_diagram(fixture_diagram("unknot")) == "arcs 1\n");
  CHECK(serialize_diagram(fixture_diagram("trefoil")) ==
        "arcs 3\n"
        "crossing over=0 under_in=1 under_out=2 sign=+\n"
        "crossing over=1 under_in=2 under_out=0 sign=+\n"
        "crossing over=2 under_in=0 under_out=1 sign=+\n");
  Diagram bad = fixture_diagram("trefoil");
  bad.crossings[0].under_out = 0;
  CHECK_THROWS_AS(serialize_diagram(bad), PreconditionError);
}

TEST_CASE("serialization round-trips on random diagrams") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    const Diagram d = random_diagram(seed, 4, 3, {3, 4});
    REQUIRE(validate_diagram(d).valid());
    const std::string text = serialize_diagram(d);
    const Diagram back = parse_diagram(text);
    CHECK(back == d);
    CHECK(serialize_diagram(back) == text);
  }
}

TEST_CASE("edges") {
  const auto unknot = compute_edges(fixture_diagram("unknot"));
  REQUIRE(unknot.size() == 1);
  CHECK(unknot[0].endpoints.empty());

  const auto theta = compute_edges(fixture_diagram("theta"));
  REQUIRE(theta.size() == 3);
  for (const Edge& e : theta) {
    CHECK(e.endpoints.size() == 2);
    CHECK(e.endpoints[0].vertex != e.endpoints[1].vertex);
  }

  const auto trefoil = compute_edges(fixture_diagram("trefoil"));
  REQUIRE(trefoil.size() == 1);
  CHECK(trefoil[0].arcs.size() == 3);
  CHECK(trefoil[0].endpoints.empty());
}

TEST_CASE("deleting edges") {
  for (int e = 0; e < 3; ++e) {
    const Diagram d = delete_edges(fixture_diagram("theta"), {e});
    CHECK(validate_diagram(d).valid());
    CHECK(d.vertices.empty());
    CHECK(d.crossings.empty());
    CHECK(d.arc_count == 1);
  }

  const Diagram mlf = fixture_diagram("mlf");
  const Diagram hopf = delete_edges(mlf, {connecting_edge(mlf)});
  CHECK(validate_diagram(hopf).valid());
  CHECK(hopf.vertices.empty());
  const LinkingMatrix lm = linking_matrix(hopf);
  CHECK(lm.component_count == 2);
  CHECK(std::abs(lm.lk(0, 1)) == 1);

  const Diagram muf = fixture_diagram("muf");
  const Diagram unlink = delete_edges(muf, {connecting_edge(muf)});
  CHECK(validate_diagram(unlink).valid());
  CHECK(unlink.vertices.empty());
  CHECK(unlink.crossings.empty());
  CHECK(linking_matrix(unlink).component_count == 2);

  CHECK_THROWS_AS(delete_edges(mlf, {17}), PreconditionError);
}

TEST_CASE("reversing orientation") {
  const Diagram hopf = fixture_diagram("hopf");
  const Diagram one = reverse_edge(hopf, 0);
  CHECK(validate_diagram(one).valid());
  CHECK(linking_matrix(one).lk(0, 1) == -linking_matrix(hopf).lk(0, 1));
  CHECK(reverse_edge(one, 0) == hopf);

  const Diagram theta = fixture_diagram("theta");
  const Diagram flipped = reverse_edge(theta, 1);
  CHECK(validate_diagram(flipped).valid());
  // Edge numbering follows the out-ends, so find the same arcs again.
  const std::vector<int> arcs = compute_edges(theta)[1].arcs;
  const std::vector<Edge> after = compute_edges(flipped);
  int again = -1;
  for (int e = 0; e < static_cast<int>(after.size()); ++e)
    if (after[e].arcs == arcs) again = e;
  REQUIRE(again >= 0);
  CHECK(reverse_edge(flipped, again) == theta);

  const Diagram trefoil = fixture_diagram("trefoil");
  const Diagram all = reverse_arcs(trefoil, {true, true, true});
  CHECK(validate_diagram(all).valid());
  CHECK(reverse_arcs(all, {true, true, true}) == trefoil);
}

TEST_CASE("link components") {
  int count = 0;
  link_components(fixture_diagram("hopf"), &count);
  CHECK(count == 2);
  const std::vector<int> trefoil =
      link_components(fixture_diagram("trefoil"), &count);
  CHECK(count == 1);
  CHECK(trefoil == std::vector<int>{0, 0, 0});
}

TEST_CASE("equivalence up to relabelling") {
  const Diagram a = parse_diagram(
      "arcs 3\n"
      "vertex ends=0:in,1:in,2:out\n"
      "vertex ends=2:in,1:out,0:out\n");
  const Diagram b = parse_diagram(
      "arcs 3\n"
      "vertex ends=2:in,0:in,1:out\n"
      "vertex ends=0:out,2:out,1:in\n");
  CHECK(equivalent_up_to_relabelling(a, b));
  const Diagram c = parse_diagram(
      "arcs 3\n"
      "vertex ends=0:in,1:in,2:out\n"
      "vertex ends=2:in,0:out,1:out\n");
  // Cyclic order at a vertex matters: no relabelling matches these.
  CHECK_FALSE(equivalent_up_to_relabelling(a, c));
  const Diagram mirror = parse_diagram(
      "arcs 3\n"
      "vertex ends=1:in,0:in,2:out\n"
      "vertex ends=2:in,1:out,0:out\n");
  CHECK_FALSE(equivalent_up_to_relabelling(a, mirror));
  CHECK_FALSE(equivalent_up_to_relabelling(fixture_diagram("hopf"),
                                           fixture_diagram("trefoil")));
}
