#include "doctest.h"
#include "skewlat/relations.hpp"

using namespace skewlat;

namespace {
const ElementId e0 = 0, ea = 1, eb = 2, ec = 3, e1 = 4;
}

TEST_CASE("natural partial order on the published tables") {
  SkewLatticeAlgebra r = builtin("NC5R");
  BinaryRelation leq = natural_leq(r);
  CHECK(leq.contains(eb, e1));        // b <= 1
  CHECK_FALSE(leq.contains(ea, eb));  // a <= b fails: b^a = a != b
  CHECK_FALSE(leq.contains(eb, ea));
  CHECK(leq.contains(e0, ec));

  // On a lattice the natural order is the lattice order.
  SkewLatticeAlgebra n5 = builtin("N5");
  BinaryRelation l5 = natural_leq(n5);
  for (ElementId x = 0; x < n5.size; ++x)
    for (ElementId y = 0; y < n5.size; ++y)
      CHECK(l5.contains(y, x) == (n5.meet_of(x, y) == y));
}

TEST_CASE("natural preorder relates the D-equivalent pair both ways") {
  SkewLatticeAlgebra r = builtin("NC5R");
  BinaryRelation pre = natural_preorder(r);
  CHECK(pre.contains(ea, eb));
  CHECK(pre.contains(eb, ea));
  CHECK_FALSE(pre.contains(ea, ec));  // a^c^a = 0
  BinaryRelation leq = natural_leq(r);
  for (ElementId x = 0; x < r.size; ++x)
    CHECK(leq.row(x).subset_of(pre.row(x)));
}

TEST_CASE("Green's relations on both handed variants") {
  SkewLatticeAlgebra r = builtin("NC5R");
  CHECK(green_R(r).contains(ea, eb));
  CHECK_FALSE(green_L(r).contains(ea, eb));
  SkewLatticeAlgebra l = builtin("NC5L");
  CHECK(green_L(l).contains(ea, eb));
  CHECK_FALSE(green_R(l).contains(ea, eb));

  SkewLatticeAlgebra m2 = builtin("M2");
  for (ElementId x = 0; x < m2.size; ++x)
    for (ElementId y = 0; y < m2.size; ++y) {
      CHECK(green_R(m2).contains(x, y) == (x == y));
      CHECK(green_D(m2).contains(x, y) == (x == y));
    }
}

TEST_CASE("D-classes of the published algebras") {
  SkewLatticeAlgebra r = builtin("NC5R");
  Partition d = d_classes(r);
  REQUIRE(d.block_count() == 4);
  CHECK(d.blocks[0] == ElemSet::single(e0));
  CHECK(d.blocks[1] == (ElemSet::single(ea) | ElemSet::single(eb)));
  CHECK(d.blocks[2] == ElemSet::single(ec));
  CHECK(d.blocks[3] == ElemSet::single(e1));

  CHECK(d_classes(make_rectangular(2, 2)).block_count() == 1);
  CHECK(d_classes(make_rectangular(1, 2)).block_count() == 1);
  CHECK(d_classes(builtin("chain_3")).block_count() == 3);
}

TEST_CASE("product of a chain with a rectangular pair") {
  SkewLatticeAlgebra p =
      direct_product(builtin("chain_2"), make_rectangular(1, 2));
  CHECK(p.size == 4);
  CHECK(handedness(p) == Handedness::right);
  Partition d = d_classes(p);
  REQUIRE(d.block_count() == 2);
  CHECK(d.blocks[0].count() == 2);
  CHECK(d.blocks[1].count() == 2);
}

TEST_CASE("congruence recognition") {
  SkewLatticeAlgebra r = builtin("NC5R");
  CHECK(is_congruence(r, d_classes(r)));
  CHECK(is_congruence(r, Partition::singletons(r.size)));

  Partition bad;
  bad.size = 5;
  bad.block_of = {0, 1, 1, 1, 0};
  bad.blocks = {ElemSet::single(e0) | ElemSet::single(e1),
                ElemSet::single(ea) | ElemSet::single(eb) |
                    ElemSet::single(ec)};
  CHECK_FALSE(is_congruence(r, bad));
  CHECK_THROWS_AS(quotient(r, bad), std::invalid_argument);
}

TEST_CASE("maximal lattice image of the five-element algebras is the diamond") {
  for (const char* name : {"NC5R", "NC5L"}) {
    SkewLatticeAlgebra s = builtin(name);
    QuotientAlgebra q = quotient(s, d_classes(s));
    CHECK(q.algebra.size == 4);
    CHECK(is_lattice(q.algebra));
    CHECK(find_isomorphism(q.algebra, builtin("M2")).has_value());
  }
  // Quotient by the identity partition is the algebra itself.
  SkewLatticeAlgebra r = builtin("NC5R");
  QuotientAlgebra qid = quotient(r, Partition::singletons(r.size));
  CHECK(find_isomorphism(qid.algebra, r).has_value());
  // Right-handedness makes R = D.
  QuotientAlgebra qr = quotient(r, Partition::from_equivalence(green_R(r)));
  CHECK(find_isomorphism(qr.algebra, builtin("M2")).has_value());
}

TEST_CASE("handedness classification") {
  CHECK(handedness(builtin("NC5R")) == Handedness::right);
  CHECK(handedness(builtin("NC5L")) == Handedness::left);
  CHECK(handedness(builtin("chain_3")) == Handedness::both);
  SkewLatticeAlgebra mixed =
      direct_product(make_rectangular(2, 1), make_rectangular(1, 2));
  CHECK(handedness(mixed) == Handedness::neither);
}

TEST_CASE("class order of the five-element right-handed algebra") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  // Blocks: 0 -> {0}, 1 -> {a,b}, 2 -> {c}, 3 -> {1}.
  CHECK(co.leq.contains(0, 1));
  CHECK(co.leq.contains(0, 2));
  CHECK(co.leq.contains(1, 3));
  CHECK(co.leq.contains(2, 3));
  CHECK_FALSE(co.leq.contains(1, 2));
  CHECK_FALSE(co.leq.contains(2, 1));
  CHECK(co.covers.contains(0, 1));
  CHECK_FALSE(co.covers.contains(0, 3));  // transitive edge reduced away

  CHECK(class_order(make_rectangular(2, 2)).classes.block_count() == 1);
  ClassOrder chain = class_order(builtin("chain_3"));
  CHECK(chain.leq.contains(0, 2));
}

TEST_CASE("element covering relation") {
  SkewLatticeAlgebra r = builtin("NC5R");
  BinaryRelation cov = element_cover(r);
  int edges = 0;
  for (ElementId x = 0; x < r.size; ++x) edges += cov.row(x).count();
  CHECK(edges == 6);
  CHECK(cov.contains(e0, ea));
  CHECK(cov.contains(ec, e1));
  CHECK_FALSE(cov.contains(e0, e1));  // not a cover, path through the middle

  CHECK(element_cover(builtin("chain_2")).contains(0, 1));
  BinaryRelation rect_cov = element_cover(make_rectangular(2, 2));
  for (ElementId x = 0; x < 4; ++x) CHECK(rect_cov.row(x).empty());
}

TEST_CASE("witness below a comparable class") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  CHECK(up_witness(r, co, e1, 1) == ea);  // least-id element of {a,b} under 1
  CHECK(up_witness(r, co, ea, 0) == e0);
  SkewLatticeAlgebra two = builtin("chain_2");
  ClassOrder co2 = class_order(two);
  CHECK(up_witness(two, co2, 1, 0) == 0);
  CHECK_THROWS_AS(up_witness(r, co, ea, 2), std::invalid_argument);
}

TEST_CASE("commuting partner across a skew diamond") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  const ElementId partner = commuting_partner(r, co, ea, 2);
  CHECK(partner == ec);
  CHECK(r.join_of(ea, ec) == e1);
  CHECK(r.join_of(ec, ea) == e1);
  CHECK(r.meet_of(ea, ec) == e0);
  CHECK(r.meet_of(ec, ea) == e0);

  SkewLatticeAlgebra l = builtin("NC5L");
  ClassOrder col = class_order(l);
  CHECK(commuting_partner(l, col, eb, 2) == ec);

  SkewLatticeAlgebra m2 = builtin("M2");
  ClassOrder com = class_order(m2);
  CHECK(commuting_partner(m2, com, 1, 2) == 2);

  DiamondSets sets = skew_diamond_sets(r, co, 1, 2);
  CHECK(sets.join_class == 3);
  CHECK(sets.meet_class == 0);
}

TEST_CASE("second decomposition on handed and mixed inputs") {
  SkewLatticeAlgebra r = builtin("NC5R");
  SecondDecomposition dec = check_second_decomposition(r);
  CHECK(find_isomorphism(dec.by_L.algebra, r).has_value());  // L is trivial
  CHECK(find_isomorphism(dec.by_R.algebra, builtin("M2")).has_value());

  SkewLatticeAlgebra n5 = builtin("N5");
  SecondDecomposition ld = check_second_decomposition(n5);
  CHECK(ld.by_L.algebra.size == n5.size);
  CHECK(ld.by_R.algebra.size == n5.size);

  SkewLatticeAlgebra mixed =
      direct_product(builtin("chain_2"), make_rectangular(2, 2));
  SecondDecomposition md = check_second_decomposition(mixed);
  CHECK(md.fibred_product.size == mixed.size);
}

TEST_CASE("hasse diagram text is exact and deterministic") {
  const std::string expected =
      "// skewlat hasse v1\n"
      "digraph hasse {\n"
      "  e0 [label=\"0\"];\n"
      "  e1 [label=\"a\"];\n"
      "  e2 [label=\"b\"];\n"
      "  e3 [label=\"c\"];\n"
      "  e4 [label=\"1\"];\n"
      "  e0 -> e1 [style=solid];\n"
      "  e0 -> e2 [style=solid];\n"
      "  e0 -> e3 [style=solid];\n"
      "  e1 -> e4 [style=solid];\n"
      "  e2 -> e4 [style=solid];\n"
      "  e3 -> e4 [style=solid];\n"
      "  e1 -> e2 [dir=none, style=dashed];\n"
      "}\n";
  SkewLatticeAlgebra r = builtin("NC5R");
  CHECK(hasse_dot(r) == expected);
  CHECK(hasse_dot(r) == hasse_dot(builtin("NC5R")));

  const std::string two = hasse_dot(builtin("chain_2"));
  CHECK(two.find("e0 -> e1 [style=solid];") != std::string::npos);
  CHECK(two.find("dashed") == std::string::npos);

  // Single-class antichain: no solid edges, a dashed path of two edges.
  const std::string rect = hasse_dot(make_rectangular(1, 3));
  CHECK(rect.find("style=solid") == std::string::npos);
  CHECK(rect.find("e0 -> e1 [dir=none, style=dashed];") != std::string::npos);
  CHECK(rect.find("e1 -> e2 [dir=none, style=dashed];") != std::string::npos);
}
