#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "qsys/colouring.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/invariants.hpp"

using namespace qsys;

namespace {

// Wirtinger counts into the panel, computed by brute force.
std::vector<std::uint64_t> brute_fingerprint(const GroupPresentation& p) {
  std::vector<std::uint64_t> out;
  for (const PanelGroup& g : fingerprint_panel())
    out.push_back(oracle::group_hom_count(p, g.group));
  return out;
}

}  // namespace

TEST_CASE("Wirtinger presentation shapes") {
  const GroupPresentation unknot = wirtinger_presentation(fixture_diagram("unknot"));
  CHECK(unknot.generator_count == 1);
  CHECK(unknot.relators.empty());

  const GroupPresentation trefoil =
      wirtinger_presentation(fixture_diagram("trefoil"));
  CHECK(trefoil.generator_count == 3);
  CHECK(trefoil.relators.size() == 3);
  for (const Word& w : trefoil.relators) CHECK(w.size() == 4);

  const GroupPresentation theta = wirtinger_presentation(fixture_diagram("theta"));
  CHECK(theta.relators.size() == 2);
  CHECK(theta.relators[0] == Word{{0, 1}, {1, 1}, {2, -1}});
}

TEST_CASE("the watch-and-fingers relations") {
  // d = ab, c = gf, ac = cd, cd = df, bh = hg, hb = bh with
  // a=0 b=1 c=2 d=3 f=4 g=5 h=6: each relation must hold in every
  // homomorphism the presentation admits.
  const GroupPresentation p = wirtinger_presentation(fixture_diagram("mwf"));
  CHECK(p.generator_count == 7);
  const GroupTable s3 = symmetric_group(3);
  std::uint64_t seen = 0;
  oracle::for_each_assignment(7, 6, [&](const std::vector<int>& m) {
    for (const Word& w : p.relators) {
      int acc = s3.identity();
      for (const Letter& l : w)
        acc = s3.mul(acc, l.exponent > 0 ? m[l.generator]
                                         : s3.inv(m[l.generator]));
      if (acc != s3.identity()) return;
    }
    ++seen;
    auto mul = [&](int x, int y) { return s3.mul(x, y); };
    const int a = m[0], b = m[1], c = m[2], d = m[3], f = m[4], g = m[5],
              h = m[6];
    CHECK(d == mul(a, b));
    CHECK(c == mul(g, f));
    CHECK(mul(a, c) == mul(c, d));
    CHECK(mul(c, d) == mul(d, f));
    CHECK(mul(b, h) == mul(h, g));
    CHECK(mul(h, b) == mul(b, h));
  });
  CHECK(seen == group_hom_count(p, s3));
  CHECK(seen == 162);
}

TEST_CASE("group homomorphism counts") {
  const GroupPresentation free2{2, {}};
  CHECK(group_hom_count(free2, symmetric_group(3)) == 36);
  const GroupPresentation z2{1, {{{0, 1}, {0, 1}}}};
  CHECK(group_hom_count(z2, cyclic_group(3)) == 1);
  CHECK(group_hom_count(z2, cyclic_group(4)) == 2);
  for (const std::string& name :
       {"unknot", "trefoil", "hopf", "theta", "mlf", "muf", "mwuf"}) {
    CAPTURE(name);
    const GroupPresentation p = wirtinger_presentation(fixture_diagram(name));
    CHECK(hom_fingerprint(p, fingerprint_panel()) == brute_fingerprint(p));
  }
}

TEST_CASE("hom counts into a conjugation quandle match colouring counts") {
  // A colouring by Conj(S3) is a homomorphism of the Wirtinger group.
  const SystemData conj = conj_s3_system();
  for (const std::string& name : {"trefoil", "hopf", "theta", "mlf", "muf"}) {
    CAPTURE(name);
    const Diagram d = fixture_diagram(name);
    CHECK(count_colourings(d, conj) ==
          group_hom_count(wirtinger_presentation(d), symmetric_group(3)));
  }
}

TEST_CASE("finger fixtures have free groups of rank two") {
  const auto panel = fingerprint_panel();
  const auto mlf = hom_fingerprint(wirtinger_presentation(fixture_diagram("mlf")),
                                   panel);
  const auto muf = hom_fingerprint(wirtinger_presentation(fixture_diagram("muf")),
                                   panel);
  CHECK(mlf == muf);
  for (std::size_t i = 0; i < panel.size(); ++i) {
    const std::uint64_t n = panel[i].group.size();
    CHECK(mlf[i] == n * n);
  }
}

TEST_CASE("presentation text") {
  const GroupPresentation p = wirtinger_presentation(fixture_diagram("hopf"));
  const std::string text = serialize_presentation(p);
  CHECK(text.rfind("gens 2\nrel ", 0) == 0);
  CHECK(parse_presentation(text) == p);
  CHECK(parse_presentation("gens 1\nrel +0 +0\n") ==
        GroupPresentation{1, {{{0, 1}, {0, 1}}}});
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\nrel +1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\nrel 0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\nrelator +0\n"), ParseError);
}

TEST_CASE("linking numbers") {
  const LinkingMatrix hopf = linking_matrix(fixture_diagram("hopf"));
  CHECK(hopf.component_count == 2);
  CHECK(hopf.lk(0, 1) == 1);
  CHECK(hopf.lk(1, 0) == 1);
  const LinkingMatrix unlink = linking_matrix(parse_diagram("arcs 2\n"));
  CHECK(unlink.component_count == 2);
  CHECK(unlink.lk(0, 1) == 0);
  const LinkingMatrix trefoil = linking_matrix(fixture_diagram("trefoil"));
  CHECK(trefoil.component_count == 1);
  CHECK(trefoil.twice == std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_AS(linking_matrix(fixture_diagram("theta")), PreconditionError);
  // A single crossing between two components is virtual: odd count.
  const LinkingMatrix odd = linking_matrix(
      parse_diagram("arcs 2\ncrossing over=1 under_in=0 under_out=0 sign=+\n"));
  CHECK_THROWS_AS(odd.lk(0, 1), PreconditionError);
}

TEST_CASE("constituent links") {
  const auto theta = kauffman_constituents(fixture_diagram("theta"));
  CHECK(theta.size() == 3);
  for (const Diagram& d : theta) {
    CHECK(d.vertices.empty());
    CHECK(linking_matrix(d).component_count == 1);
  }
  CHECK(summary_to_text(kauffman_summary(fixture_diagram("theta"))) ==
        "{[], [], []}");

  const KauffmanSummary mlf = kauffman_summary(fixture_diagram("mlf"));
  CHECK(std::any_of(mlf.begin(), mlf.end(), [](const auto& v) {
    return std::find(v.begin(), v.end(), 1u) != v.end();
  }));
  const KauffmanSummary muf = kauffman_summary(fixture_diagram("muf"));
  for (const auto& v : muf)
    for (std::uint64_t lk : v) CHECK(lk == 0);

  const KauffmanSummary happy = kauffman_summary(fixture_diagram("athlete-happy"));
  const KauffmanSummary unhappy =
      kauffman_summary(fixture_diagram("athlete-unhappy"));
  CHECK(happy != unhappy);

  const SystemData s = t3r3z2_system();
  const KauffmanSummary coloured = kauffman_summary(fixture_diagram("theta"), &s);
  CHECK(coloured == KauffmanSummary{{6}, {6}, {6}});
}
