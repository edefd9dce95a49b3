#include "doctest.h"
#include "oracles.hpp"
#include "qsys/colouring.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/moves.hpp"

using namespace qsys;

namespace {

MoveSpec spec(MoveKind kind, int site) {
  MoveSpec m;
  m.kind = kind;
  m.site = site;
  return m;
}

}  // namespace

TEST_CASE("a kink on the unknot") {
  const Diagram unknot = fixture_diagram("unknot");
  const MoveResult r = apply_move(unknot, spec(MoveKind::r1_insert, 0));
  CHECK(validate_diagram(r.diagram).valid());
  CHECK(r.diagram.crossings.size() == 1);
  CHECK(r.diagram.arc_count == 1);
  CHECK(r.arc_map.size() == 1);
  for (const SystemData& s :
       {quandle_system(dihedral_quandle(3)), t3r3z2_system(),
        conj_s3_system()})
    CHECK(count_colourings(r.diagram, s) == count_colourings(unknot, s));
}

TEST_CASE("every applicable move keeps validity and the colouring count") {
  const SystemData s = t3r3z2_system();
  for (const std::string& name : {"unknot", "hopf", "theta", "muf", "mlf"}) {
    const Diagram d = fixture_diagram(name);
    const std::uint64_t before = count_colourings(d, s);
    for (MoveKind kind : default_moves(FuzzScope::handlebody))
      for (const MoveSpec& m : applicable_moves(d, kind)) {
        CAPTURE(name);
        CAPTURE(describe(m));
        CHECK(move_applies(d, m));
        const MoveResult r = apply_move(d, m);
        REQUIRE(validate_diagram(r.diagram).valid());
        CHECK(count_colourings(r.diagram, s) == before);
        CHECK(count_colourings(r.diagram, s) ==
              oracle::colouring_count(r.diagram, s));
      }
  }
}

TEST_CASE("Reidemeister II inserts a cancelling pair") {
  const Diagram hopf = fixture_diagram("hopf");
  MoveSpec m = spec(MoveKind::r2_insert, 0);
  m.other = 1;
  const MoveResult r = apply_move(hopf, m);
  CHECK(r.diagram.crossings.size() == 4);
  int total = 0;
  for (const Crossing& c : r.diagram.crossings) total += c.sign;
  CHECK(total == 2);
  const SystemData q = quandle_system(dihedral_quandle(5));
  CHECK(count_colourings(r.diagram, q) == count_colourings(hopf, q));
}

TEST_CASE("TR1 trades two ends through a crossing") {
  const Diagram theta = fixture_diagram("theta");
  for (int side : {0, 1}) {
    MoveSpec m = spec(MoveKind::tr1_insert, 0);
    m.position = 1;
    m.side = side;
    const Diagram r = apply_move(theta, m).diagram;
    CHECK(validate_diagram(r).valid());
    CHECK(r.crossings.size() == 1);
    CHECK(r.vertices.size() == 2);
    const SystemData s = t3r3z2_system();
    CHECK(count_colourings(r, s) == count_colourings(theta, s));
  }
}

TEST_CASE("TR2 slides a prepared strand") {
  const SystemData s = t3r3z2_system();
  const Diagram theta = fixture_diagram("theta");
  for (int start = 0; start < 3; ++start)
    for (int length = 1; length <= 2; ++length)
      for (bool over : {true, false})
        for (int tau : {1, -1}) {
          CAPTURE(start);
          CAPTURE(length);
          CAPTURE(over);
          CAPTURE(tau);
          const Diagram site =
              prepare_tr2_site(theta, 0, start, length, -1, over, tau);
          MoveSpec m = spec(MoveKind::tr2_slide, 0);
          m.position = start;
          m.length = length;
          m.side = over ? 0 : 1;
          REQUIRE(move_applies(site, m));
          const Diagram slid = apply_move(site, m).diagram;
          CHECK(validate_diagram(slid).valid());
          CHECK(slid.crossings.size() ==
                static_cast<std::size_t>(3 - length));
          CHECK(count_colourings(slid, s) == count_colourings(site, s));
        }
}

TEST_CASE("SR forward and backward are inverse") {
  const Diagram theta = fixture_diagram("theta");
  const SystemData s = t3r3z2_system();
  for (int arc = 0; arc < 3; ++arc) {
    const Diagram fwd = apply_move(theta, spec(MoveKind::sr_forward, arc)).diagram;
    CHECK(validate_diagram(fwd).valid());
    CHECK(count_colourings(fwd, s) == count_colourings(theta, s));
    const Diagram back =
        apply_move(fwd, spec(MoveKind::sr_backward, arc)).diagram;
    CHECK(equivalent_up_to_relabelling(back, theta));
  }
  // An arc joining a vertex to itself is not an SR site.
  const Diagram muf = fixture_diagram("muf");
  CHECK_FALSE(move_applies(muf, spec(MoveKind::sr_forward, 0)));
  CHECK_THROWS_AS(apply_move(muf, spec(MoveKind::sr_forward, 0)), MoveError);
}

TEST_CASE("vertex rotation") {
  const Diagram theta = fixture_diagram("theta");
  MoveSpec m = spec(MoveKind::vertex_rotate, 0);
  const Diagram left = apply_move(theta, m).diagram;
  CHECK(left.vertices[0].ends[0] == theta.vertices[0].ends[1]);
  m.direction = -1;
  const Diagram right = apply_move(left, m).diagram;
  CHECK(right == theta);
  CHECK_THROWS_AS(apply_move(theta, spec(MoveKind::vertex_rotate, 5)),
                  MoveError);
}

TEST_CASE("random diagrams") {
  const Diagram empty = random_diagram(0, 0, 0);
  CHECK(empty == fixture_diagram("unknot"));
  const Diagram a = random_diagram(42, 4, 2, {3});
  CHECK(validate_diagram(a).valid());
  for (const Vertex& v : a.vertices) CHECK(v.valence() == 3);
  CHECK(a.vertices.size() <= 2);
  CHECK(random_diagram(42, 4, 2, {3}) == a);
  CHECK(random_diagram(43, 4, 2, {3}) != a);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Diagram d = random_diagram(seed, 5, 3, {3, 4, 5});
    CHECK(validate_diagram(d).valid());
  }
}

TEST_CASE("move kind names") {
  for (MoveKind k : default_moves(FuzzScope::handlebody))
    CHECK(parse_move_kind(to_string(k)) == k);
  CHECK(parse_move_kind("r1-insert") == MoveKind::r1_insert);
  CHECK(parse_move_kind("tr2_slide") == MoveKind::tr2_slide);
  CHECK(parse_move_kind("sr_forward") == MoveKind::sr_forward);
  CHECK_THROWS(parse_move_kind("r3"));
  CHECK(parse_fuzz_scope("n-valent") == FuzzScope::n_valent);
}

TEST_CASE("fuzzing") {
  FuzzOptions o;
  o.trials = 40;
  o.seed = 7;
  o.scope = FuzzScope::links;
  const FuzzReport links =
      fuzz_invariance(quandle_system(dihedral_quandle(3)), o);
  CHECK(links.trials.size() == 40);
  CHECK(links.mismatches() == 0);

  o.scope = FuzzScope::trivalent;
  const FuzzReport one = fuzz_invariance(t3r3z2_system(), o);
  CHECK(one.mismatches() == 0);
  o.jobs = 4;
  const FuzzReport four = fuzz_invariance(t3r3z2_system(), o);
  CHECK(one.to_text() == four.to_text());
  CHECK(one.to_text().rfind("trial 0 seed " + std::to_string(trial_seed(7, 0)),
                            0) == 0);

  o.scope = FuzzScope::n_valent;
  o.arities = {2, 3};
  o.jobs = 1;
  const SystemData g3 = gamma_from_oplus(t3r3z2_system(), 3).system;
  CHECK(fuzz_invariance(g3, o).mismatches() == 0);

  o.scope = FuzzScope::trivalent;
  o.arities.clear();
  CHECK_THROWS_AS(fuzz_invariance(broken_cond4_system(), o), PreconditionError);
  CHECK_FALSE(scope_report(broken_cond4_system(), FuzzScope::trivalent).valid());
  CHECK(scope_report(t3r3z2_system(), FuzzScope::handlebody).valid());
  CHECK(trial_seed(1, 2) == trial_seed(1, 2));
  CHECK(trial_seed(1, 2) != trial_seed(1, 3));
}
