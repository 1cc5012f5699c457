#include "doctest.h"
#include "skewlat/algebra.hpp"
#include "skewlat/ideals.hpp"

using namespace skewlat;

TEST_CASE("published five-element tables validate and match the source") {
  SkewLatticeAlgebra r = builtin("NC5R");
  CHECK(r.validated);
  // Spot values straight from the Cayley tables (0,a,b,c,1 = 0..4).
  CHECK(r.meet_of(1, 2) == 2);  // a^b = b
  CHECK(r.meet_of(2, 1) == 1);  // b^a = a
  CHECK(r.join_of(1, 3) == 4);  // avc = 1
  CHECK(r.join_of(1, 2) == 1);  // avb = a

  SkewLatticeAlgebra l = builtin("NC5L");
  CHECK(l.meet_of(1, 2) == 1);  // a^b = a
  CHECK(l.meet_of(2, 1) == 2);  // b^a = b
  CHECK(l.join_of(2, 1) == 1);  // bva = a
}

TEST_CASE("validate reports failures with replayable witnesses") {
  // 2-chain with a corrupted idempotency cell.
  OpTable meet = OpTable::from_rows({{1, 0}, {0, 1}});
  OpTable join = OpTable::from_rows({{0, 1}, {1, 1}});
  ValidationReport report = validate(meet, join);
  CHECK_FALSE(report.passed);
  bool found = false;
  for (const LawFailure& f : report.failures)
    if (f.law == "idempotent-meet") {
      found = true;
      REQUIRE(f.witness.size() == 1);
      CHECK(f.witness[0] == 0);
      CHECK(meet(f.witness[0], f.witness[0]) != f.witness[0]);
    }
  CHECK(found);
}

TEST_CASE("validate distinguishes structural errors from law failures") {
  OpTable meet = OpTable::from_rows({{0, 0}, {0, 1}});
  OpTable join = OpTable::from_rows({{0, 7}, {1, 1}});
  ValidationReport report = validate(meet, join);
  CHECK_FALSE(report.structurally_ok());
  CHECK_FALSE(report.passed);
  CHECK(report.failures.empty());
}

TEST_CASE("a lattice is a skew lattice") {
  SkewLatticeAlgebra two = builtin("chain_2");
  CHECK(two.validated);
  CHECK(is_lattice(two));
  CHECK(is_lattice(builtin("N5")));
  CHECK(is_lattice(builtin("M2")));
  CHECK_FALSE(is_lattice(builtin("NC5R")));
  CHECK_FALSE(is_lattice(make_rectangular(2, 2)));
}

TEST_CASE("rectangular algebras satisfy the rectangular identities") {
  for (int l = 1; l <= 3; ++l)
    for (int r = 1; r <= 3; ++r) {
      SkewLatticeAlgebra s = make_rectangular(l, r);
      CHECK(s.size == l * r);
      for (ElementId x = 0; x < s.size; ++x)
        for (ElementId y = 0; y < s.size; ++y) {
          CHECK(s.meet3(x, y, x) == x);
          CHECK(s.join3(x, y, x) == x);
        }
    }
  CHECK(make_rectangular(1, 1).size == 1);
}

TEST_CASE("direct products validate and behave componentwise") {
  SkewLatticeAlgebra s = direct_product(builtin("NC5R"), builtin("chain_2"));
  CHECK(s.size == 10);
  CHECK(s.validated);

  SkewLatticeAlgebra one = builtin("chain_1");
  SkewLatticeAlgebra t = direct_product(builtin("NC5L"), one);
  CHECK(find_isomorphism(t, builtin("NC5L")).has_value());
}

TEST_CASE("band products are idempotent") {
  for (const char* name : {"NC5R", "NC5L", "N5"}) {
    SkewLatticeAlgebra s = builtin(name);
    for (ElementId x = 0; x < s.size; ++x)
      for (ElementId y = 0; y < s.size; ++y) {
        const ElementId mt = s.meet_of(x, y);
        CHECK(s.meet_of(mt, mt) == mt);
        const ElementId jn = s.join_of(x, y);
        CHECK(s.join_of(jn, jn) == jn);
      }
  }
}

TEST_CASE("isomorphism search finds and refutes correctly") {
  SkewLatticeAlgebra r = builtin("NC5R");
  auto self = find_isomorphism(r, r);
  REQUIRE(self.has_value());
  for (ElementId x = 0; x < r.size; ++x)
    for (ElementId y = 0; y < r.size; ++y)
      CHECK(self->mapping[r.meet_of(x, y)] ==
            r.meet_of(self->mapping[x], self->mapping[y]));

  CHECK_FALSE(find_isomorphism(r, builtin("NC5L")).has_value());
  CHECK_FALSE(
      find_isomorphism(make_rectangular(2, 3), make_rectangular(3, 2))
          .has_value());
  CHECK(find_isomorphism(make_rectangular(2, 3), make_rectangular(2, 3))
            .has_value());

  // Symmetry: a witness one way gives one the other way.
  SkewLatticeAlgebra p = direct_product(builtin("chain_2"), builtin("chain_2"));
  auto fwd = find_isomorphism(p, builtin("M2"));
  auto bwd = find_isomorphism(builtin("M2"), p);
  CHECK(fwd.has_value() == bwd.has_value());
}

TEST_CASE("dualize is an involution and swaps the operations") {
  SkewLatticeAlgebra r = builtin("NC5R");
  SkewLatticeAlgebra d = dualize(r);
  CHECK(d.meet == r.join);
  CHECK(d.join == r.meet);
  SkewLatticeAlgebra dd = dualize(d);
  CHECK(dd.meet == r.meet);
  CHECK(dd.join == r.join);

  SkewLatticeAlgebra two = builtin("chain_2");
  SkewLatticeAlgebra twod = dualize(two);
  CHECK(twod.meet_of(0, 1) == 1);  // reversed chain
}

TEST_CASE("ideals of the dual are filters of the original") {
  SkewLatticeAlgebra l = builtin("NC5L");
  IdealLattice filters = enumerate_filters(l);
  IdealLattice dual_ideals = enumerate_ideals(dualize(l));
  REQUIRE(filters.members.size() == dual_ideals.members.size());
  for (std::size_t i = 0; i < filters.members.size(); ++i)
    CHECK(filters.members[i].elements == dual_ideals.members[i].elements);
}

TEST_CASE("absorption dualities hold on every validated algebra") {
  for (const char* name : {"NC5R", "NC5L", "chain_3", "M2", "N5"}) {
    SkewLatticeAlgebra s = builtin(name);
    for (ElementId x = 0; x < s.size; ++x)
      for (ElementId y = 0; y < s.size; ++y) {
        CHECK((s.join_of(x, y) == x) == (s.meet_of(x, y) == y));
        CHECK((s.join_of(x, y) == y) == (s.meet_of(x, y) == x));
        // Idempotence of products in the band reducts.
        CHECK(s.meet_of(s.meet_of(x, y), s.meet_of(x, y)) == s.meet_of(x, y));
        CHECK(s.join_of(s.join_of(x, y), s.join_of(x, y)) == s.join_of(x, y));
      }
  }
}

TEST_CASE("restrict_to produces the induced subalgebra") {
  SkewLatticeAlgebra r = builtin("NC5R");
  // {0,a,b} is closed (the primitive subalgebra below the top).
  ElemSet sub;
  sub.add(0);
  sub.add(1);
  sub.add(2);
  SkewLatticeAlgebra prim = restrict_to(r, sub);
  CHECK(prim.size == 3);
  CHECK(prim.names == std::vector<std::string>{"0", "a", "b"});
  CHECK_THROWS_AS(restrict_to(r, ElemSet::single(1) | ElemSet::single(3)),
                  std::invalid_argument);
}
