#include "doctest.h"
#include "oracles.hpp"
#include "qsys/colouring.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/moves.hpp"

using namespace qsys;

namespace {

int colour(const SystemData& s, int x, int g) { return x * s.g_size + g; }

}  // namespace

TEST_CASE("single colours on the unknot") {
  const SystemData s = t3r3z2_system();
  const Diagram unknot = fixture_diagram("unknot");
  for (int c = 0; c < 6; ++c)
    CHECK(verify_colouring(unknot, s, Colouring{{c}}).valid());
  CHECK(count_colourings(unknot, s) == 6);
  const auto some = enumerate_colourings(unknot, s, 3);
  REQUIRE(some.size() == 3);
  CHECK(some[0] != some[1]);
  CHECK(some[1] != some[2]);
  CHECK(some[0] != some[2]);
}

TEST_CASE("trefoil coloured by a bare quandle") {
  const SystemData r3 = quandle_system(dihedral_quandle(3));
  const Diagram trefoil = fixture_diagram("trefoil");
  CHECK(count_colourings(trefoil, r3) == 9);
  CHECK(oracle::colouring_count(trefoil, r3) == 9);
  const auto all = enumerate_colourings(trefoil, r3, 100);
  CHECK(all.size() == 9);
  for (const Colouring& c : all) CHECK(verify_colouring(trefoil, r3, c).valid());
  CHECK(count_colourings(trefoil, r3, CountMode::generating) == 6);
}

TEST_CASE("theta graph colourings") {
  const SystemData s = t3r3z2_system();
  const Diagram theta = fixture_diagram("theta");
  CHECK(count_colourings(theta, s) == 12);
  const int e = 0, g = 1;
  auto check = [&](int g0, int g1, int g2) {
    return verify_colouring(
               theta, s,
               Colouring{{colour(s, 0, g0), colour(s, 0, g1), colour(s, 0, g2)}})
        .valid();
  };
  CHECK(check(e, e, e));
  CHECK(check(e, g, g));
  CHECK_FALSE(check(e, g, e));
  const AxiomReport mixed = verify_colouring(
      theta, s, Colouring{{colour(s, 0, e), colour(s, 1, e), colour(s, 0, e)}});
  CHECK(mixed.has("vertex-x"));
  CHECK(verify_colouring(theta, s, Colouring{{0, 0, 99}}).has("range"));
}

TEST_CASE("reversing an edge with g -> rho(g) keeps colourings proper") {
  const SystemData s = t3r3z2_system();
  const Diagram theta = fixture_diagram("theta");
  const std::vector<Edge> edges = compute_edges(theta);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Diagram flipped = reverse_edge(theta, e);
    for (const Colouring& c : enumerate_colourings(theta, s, 100)) {
      Colouring moved = c;
      for (int arc : edges[e].arcs) {
        const int x = c.assignment[arc] / s.g_size;
        const int g = c.assignment[arc] % s.g_size;
        moved.assignment[arc] = colour(s, x, s.rho_at(x, g));
      }
      CHECK(verify_colouring(flipped, s, moved).valid());
    }
    CHECK(count_colourings(flipped, s) == count_colourings(theta, s));
  }
}

TEST_CASE("vertex rule on its own") {
  const SystemData s = t3r3z2_system();
  using D = Direction;
  CHECK(vertex_rule_holds(s, {D::in, D::in, D::out}, {1, 1, 0}));
  CHECK_FALSE(vertex_rule_holds(s, {D::in, D::in, D::out}, {1, 0, 0}));
  CHECK_THROWS_AS(
      vertex_rule_holds(s, {D::in, D::in, D::in, D::out}, {0, 0, 0, 0}),
      MissingFieldError);
  const GammaResult g3 = gamma_from_oplus(s, 3);
  CHECK(vertex_rule_holds(g3.system, {D::in, D::in, D::in, D::out},
                          {1, 1, 1, 1}));
}

TEST_CASE("counts agree with brute force on the bundled diagrams") {
  const SystemData s = t3r3z2_system();
  for (const std::string& name :
       {"unknot", "trefoil", "hopf", "theta", "mlf", "muf", "mwuf",
        "athlete-unhappy"}) {
    CAPTURE(name);
    const Diagram d = fixture_diagram(name);
    CHECK(count_colourings(d, s) == oracle::colouring_count(d, s));
    CHECK(count_colourings(d, s, CountMode::generating) ==
          oracle::colouring_count(d, s, true));
  }
  const SystemData axet = fixture_system("axet-s3");
  for (const std::string& name : {"theta", "muf", "mlf"}) {
    CAPTURE(name);
    const Diagram d = fixture_diagram(name);
    CHECK(count_colourings(d, axet) == oracle::colouring_count(d, axet));
  }
}

TEST_CASE("parallel counting matches sequential counting") {
  const SystemData s = t3r3z2_system();
  for (const std::string& name : {"mwf", "mwuf", "athlete-happy"}) {
    const Diagram d = fixture_diagram(name);
    for (CountMode mode : {CountMode::all, CountMode::generating})
      CHECK(count_colourings(d, s, mode, 1) == count_colourings(d, s, mode, 4));
  }
}

TEST_CASE("the watch fixtures are told apart") {
  const SystemData s = t3r3z2_system();
  const Diagram mwuf = fixture_diagram("mwuf");
  const Diagram mwf = fixture_diagram("mwf");
  CHECK(count_colourings(mwuf, s, CountMode::generating) == 18);
  CHECK(count_colourings(mwf, s, CountMode::generating) == 0);
  CHECK(oracle::colouring_count(mwf, s, true) == 0);
  CHECK(count_colourings(mwuf, s) == 72);
  CHECK(count_colourings(mwf, s) == 54);
  for (const Colouring& c : enumerate_colourings(mwf, s, 10))
    CHECK_FALSE(colouring_generates(s, c));
}

TEST_CASE("colourings on rotated vertices") {
  const SystemData s = t3r3z2_system();
  const Diagram theta = fixture_diagram("theta");
  MoveSpec m;
  m.kind = MoveKind::vertex_rotate;
  for (int v = 0; v < 2; ++v)
    for (int dir : {1, -1}) {
      m.site = v;
      m.direction = dir;
      const Diagram r = apply_move(theta, m).diagram;
      CHECK(count_colourings(r, s) == count_colourings(theta, s));
    }
}
