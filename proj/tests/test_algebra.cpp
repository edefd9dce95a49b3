#include "doctest.h"
#include "oracles.hpp"
#include "qsys/algebra.hpp"

using namespace qsys;

namespace {

OperationTable r3() {
  return OperationTable::from_function(3, [](int i, int j) {
    return ((2 * j - i) % 3 + 3) % 3;
  });
}

}  // namespace

TEST_CASE("dihedral and trivial tables are quandles") {
  CHECK(dihedral_quandle(3) == r3());
  CHECK(validate_axioms(r3(), Profile::quandle).valid());
  for (int n = 1; n <= 6; ++n) {
    CHECK(validate_axioms(trivial_quandle(n), Profile::quandle).valid());
    CHECK(validate_axioms(dihedral_quandle(n), Profile::quandle).valid() ==
          oracle::is_quandle(dihedral_quandle(n)));
  }
  CHECK(trivial_quandle(3) ==
        OperationTable::from_function(3, [](int i, int) { return i; }));
}

TEST_CASE("a broken column is reported as a right-invertibility witness") {
  OperationTable t = r3();
  t.set(0, 1, 0);
  const AxiomReport report = validate_axioms(t, Profile::quandle);
  CHECK_FALSE(report.valid());
  CHECK(report.has("right-invertibility"));
  bool column_one = false;
  for (const Violation& v : report.violations())
    if (v.axiom == "right-invertibility" && !v.witness.empty() &&
        v.witness[0] == 1)
      column_one = true;
  CHECK(column_one);
}

TEST_CASE("kei and rack profiles") {
  CHECK(validate_axioms(r3(), Profile::kei).valid());
  const OperationTable conj = conjugation_quandle(symmetric_group(3));
  CHECK_FALSE(validate_axioms(conj, Profile::kei).valid());
  // A constant permutation action is a rack that is not a quandle.
  const OperationTable shift =
      OperationTable::from_function(3, [](int i, int) { return (i + 1) % 3; });
  CHECK(validate_axioms(shift, Profile::rack).valid());
  CHECK_FALSE(validate_axioms(shift, Profile::quandle).valid());
}

TEST_CASE("group constructions satisfy the group profile") {
  for (const GroupTable& g :
       {cyclic_group(1), cyclic_group(4), symmetric_group(3), dihedral_group(4),
        direct_product(cyclic_group(2), cyclic_group(2))}) {
    CHECK(validate_axioms(g.table(), Profile::group, g.identity()).valid());
    for (int a = 0; a < g.size(); ++a)
      CHECK(g.mul(a, g.inv(a)) == g.identity());
  }
  CHECK(symmetric_group(3).size() == 6);
  CHECK_FALSE(symmetric_group(3).is_abelian());
  CHECK(dihedral_group(4).size() == 8);
  CHECK(cyclic_group(6).exponent() == 6);
}

TEST_CASE("standard quandle constructors") {
  CHECK(takasaki_quandle(cyclic_group(3)) == r3());
  const GroupTable s3 = symmetric_group(3);
  const OperationTable conj = conjugation_quandle(s3, 1);
  CHECK(conj.size() == 6);
  CHECK(oracle::is_quandle(conj));
  CHECK(validate_axioms(conj, Profile::quandle).valid());
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      CHECK(conj(g, h) == s3.mul(s3.mul(s3.inv(h), g), h));
  // phi = inversion on Z5 is an automorphism: x*y = -(x-y)+y = 2y-x.
  const GroupTable z5 = cyclic_group(5);
  const OperationTable alex = alexander_quandle(z5, z5.inverse());
  CHECK(alex == dihedral_quandle(5));
  CHECK(oracle::is_quandle(takasaki_quandle(cyclic_group(4))));
}

TEST_CASE("dual operation") {
  CHECK(dual_operation(r3()) == r3());
  CHECK(dual_operation(trivial_quandle(4)) == trivial_quandle(4));
  const GroupTable s3 = symmetric_group(3);
  const OperationTable conj = conjugation_quandle(s3);
  const OperationTable dual = dual_operation(conj);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      CHECK(dual(g, h) == s3.mul(s3.mul(h, g), s3.inv(h)));
      CHECK(dual(conj(g, h), h) == g);
      CHECK(conj(dual(g, h), h) == g);
    }
  CHECK(dual_operation(dual) == conj);
}

TEST_CASE("generated subalgebra") {
  CHECK(generated_subalgebra(r3(), {0}) == std::vector<int>{0});
  CHECK(generated_subalgebra(r3(), {0, 1}) == std::vector<int>{0, 1, 2});
  const OperationTable conj = conjugation_quandle(symmetric_group(3));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const std::set<int> expected = oracle::closure(conj, {a, b});
      const std::vector<int> got = generated_subalgebra(conj, {a, b});
      CHECK(std::set<int>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("quandle homomorphism counts") {
  CHECK(hom_count(trivial_quandle(2), trivial_quandle(3), false) == 9);
  CHECK(hom_count(r3(), r3(), false) == 9);
  CHECK(hom_count(r3(), trivial_quandle(3), true) == 0);
  const OperationTable conj = conjugation_quandle(symmetric_group(3));
  for (const auto& [a, b] :
       std::vector<std::pair<OperationTable, OperationTable>>{
           {r3(), conj}, {conj, r3()}, {dihedral_quandle(4), r3()},
           {trivial_quandle(2), dihedral_quandle(4)}}) {
    CHECK(hom_count(a, b, false) == oracle::quandle_hom_count(a, b, false));
    CHECK(hom_count(a, b, true) == oracle::quandle_hom_count(a, b, true));
  }
}

TEST_CASE("operation tables reject out-of-range entries") {
  CHECK_THROWS_AS(OperationTable(2, {0, 1, 2, 0}), PreconditionError);
  CHECK_THROWS_AS(OperationTable(2, {0, 1, 1}), PreconditionError);
  CHECK(is_permutation({2, 0, 1}, 3));
  CHECK_FALSE(is_permutation({0, 0, 1}, 3));
}

TEST_CASE("symmetric group element encoding round-trips") {
  for (int g = 0; g < 24; ++g)
    CHECK(symmetric_group_element(symmetric_group_permutation(4, g)) == g);
}
