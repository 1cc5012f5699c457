#include "doctest.h"
#include "skewlat/cosets.hpp"

using namespace skewlat;

namespace {
const ElementId e0 = 0, ea = 1, eb = 2, ec = 3, e1 = 4;

ElemSet set_of(std::initializer_list<ElementId> xs) {
  ElemSet out;
  for (ElementId x : xs) out.add(x);
  return out;
}
}  // namespace

TEST_CASE("cosets of the published right-handed algebra") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  // Blocks: 0={0}, 1={a,b}, 2={c}, 3={1}.
  ClassPair top_mid = make_class_pair(co, 3, 1);
  CHECK(coset(r, co, top_mid, ea, CosetSide::in_lower).elements ==
        ElemSet::single(ea));
  CHECK(coset(r, co, top_mid, e1, CosetSide::in_upper).elements ==
        ElemSet::single(e1));

  ClassPair mid_bot = make_class_pair(co, 1, 0);
  CHECK(coset(r, co, mid_bot, e0, CosetSide::in_lower).elements ==
        ElemSet::single(e0));
  CHECK(coset(r, co, mid_bot, ea, CosetSide::in_upper).elements ==
        ElemSet::single(ea));

  CHECK_THROWS_AS(coset(r, co, top_mid, e1, CosetSide::in_lower),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_class_pair(co, 1, 2), std::invalid_argument);
}

TEST_CASE("image sets evaluate both formulas") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  CHECK(image_set(r, co, e1, 1) == set_of({ea, eb}));
  CHECK(image_set(r, co, ea, 3) == ElemSet::single(e1));
  CHECK(image_set(r, co, ec, 0) == ElemSet::single(e0));
  CHECK_THROWS_AS(image_set(r, co, ea, 2), std::invalid_argument);
}

TEST_CASE("coset partitions of comparable pairs") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  CosetDecomposition top_mid = coset_partition(r, co, make_class_pair(co, 3, 1));
  REQUIRE(top_mid.in_lower.size() == 2);
  CHECK(top_mid.in_lower[0].elements == ElemSet::single(ea));
  CHECK(top_mid.in_lower[1].elements == ElemSet::single(eb));
  REQUIRE(top_mid.in_upper.size() == 1);
  CHECK(top_mid.in_upper[0].elements == ElemSet::single(e1));

  CosetDecomposition mid_bot = coset_partition(r, co, make_class_pair(co, 1, 0));
  REQUIRE(mid_bot.in_lower.size() == 1);
  REQUIRE(mid_bot.in_upper.size() == 2);
  CHECK(mid_bot.in_upper[0].elements == ElemSet::single(ea));
  CHECK(mid_bot.in_upper[1].elements == ElemSet::single(eb));

  // Lattice pairs decompose into singletons.
  SkewLatticeAlgebra m2 = builtin("M2");
  ClassOrder com = class_order(m2);
  CosetDecomposition lat = coset_partition(m2, com, make_class_pair(com, 3, 0));
  CHECK(lat.in_lower.size() == 1);
  CHECK(lat.in_upper.size() == 1);
}

TEST_CASE("coset bijections pair elements by the order") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  ClassPair pair = make_class_pair(co, 3, 1);
  Coset up = coset(r, co, pair, e1, CosetSide::in_upper);
  Coset down = coset(r, co, pair, ea, CosetSide::in_lower);
  CosetBijection bij = coset_bijection(r, co, up, down);
  REQUIRE(bij.mapping.size() == 1);
  CHECK(bij.mapping[0] == std::pair<ElementId, ElementId>{e1, ea});

  // Product of a chain with a right-rectangular pair: (1,r) covers (0,r).
  SkewLatticeAlgebra p =
      direct_product(builtin("chain_2"), make_rectangular(1, 2));
  ClassOrder cop = class_order(p);
  ClassPair pp = make_class_pair(cop, 1, 0);
  CosetDecomposition dec = coset_partition(p, cop, pp);
  REQUIRE(dec.in_upper.size() == 1);
  REQUIRE(dec.in_lower.size() == 1);
  CosetBijection pb = coset_bijection(p, cop, dec.in_upper[0], dec.in_lower[0]);
  for (auto [x, y] : pb.mapping) CHECK(x % 2 == y % 2);  // same rect coordinate
}

TEST_CASE("reconstruction of mixed products from coset data") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b && co.leq.contains(b, a))
        CHECK(reconstruction_check(r, co, make_class_pair(co, a, b)));

  SkewLatticeAlgebra mixed =
      direct_product(builtin("chain_2"), make_rectangular(2, 2));
  ClassOrder com = class_order(mixed);
  CHECK(reconstruction_check(mixed, com, make_class_pair(com, 1, 0)));
}

TEST_CASE("indices count cosets and image sets alike") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  ClassPair top_mid = make_class_pair(co, 3, 1);
  CHECK(coset_index(r, co, top_mid, IndexDirection::upper_in_lower).value == 2);
  CHECK(coset_index(r, co, top_mid, IndexDirection::lower_in_upper).value == 1);
  ClassPair mid_bot = make_class_pair(co, 1, 0);
  CHECK(coset_index(r, co, mid_bot, IndexDirection::upper_in_lower).value == 1);
  CHECK(coset_index(r, co, mid_bot, IndexDirection::lower_in_upper).value == 2);

  SkewLatticeAlgebra n5 = builtin("N5");
  ClassOrder con = class_order(n5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b && con.leq.contains(b, a)) {
        ClassPair pr = make_class_pair(con, a, b);
        CHECK(coset_index(n5, con, pr, IndexDirection::upper_in_lower).value ==
              1);
        CHECK(coset_index(n5, con, pr, IndexDirection::lower_in_upper).value ==
              1);
      }
}

TEST_CASE("categorical but not strictly categorical") {
  SkewLatticeAlgebra r = builtin("NC5R");
  CHECK(is_categorical(r));
  // The composite through the wrong middle coset is empty.
  CHECK_FALSE(strictly_categorical_by_cosets(r));
  CHECK_FALSE(strictly_categorical_by_subalgebras(r));
  CHECK_FALSE(is_strictly_categorical(r));

  CHECK(is_categorical(builtin("N5")));
  CHECK(is_strictly_categorical(builtin("N5")));
  SkewLatticeAlgebra chainprod =
      direct_product(builtin("chain_3"), make_rectangular(1, 2));
  CHECK(is_strictly_categorical(chainprod));
}

TEST_CASE("order equals the union of coset bijection graphs") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b && co.leq.contains(b, a))
        CHECK(check_order_eq_cosets(r, co, make_class_pair(co, a, b)));
}

TEST_CASE("counting along class chains") {
  SkewLatticeAlgebra r = builtin("NC5R");
  ClassOrder co = class_order(r);
  CountingReport rep = counting_check(r, co, {3, 1, 0});
  CHECK(rep.inequality_ok);
  CHECK_FALSE(rep.strictly_categorical);

  SkewLatticeAlgebra chainprod =
      direct_product(builtin("chain_3"), make_rectangular(1, 2));
  ClassOrder coc = class_order(chainprod);
  CountingReport crep = counting_check(chainprod, coc, {2, 1, 0});
  CHECK(crep.strictly_categorical);
  CHECK(crep.inequality_ok);
  CHECK(crep.equality_ok);
  CHECK(crep.product_formula_ok);
  CHECK(crep.divisibility_ok);

  CHECK_THROWS_AS(counting_check(r, co, {1, 2}), std::invalid_argument);
}

TEST_CASE("skew ideals against the coset structure") {
  CHECK(ideal_coset_checks(builtin("NC5R")));
  CHECK(ideal_coset_checks(builtin("N5")));

  // Primitive subalgebra {1,a,b}: the down-star of the top is everything.
  SkewLatticeAlgebra prim = restrict_to(
      builtin("NC5R"), set_of({ea, eb, e1}));
  CHECK(ideal_coset_checks(prim));
  CHECK(principal_skew_ideal(prim, 2).elements == ElemSet::full(3));
}

TEST_CASE("index chain bounds on the down-star size") {
  SkewLatticeAlgebra r = builtin("NC5R");
  for (ElementId x = 0; x < r.size; ++x) CHECK(index_ideal_bound_check(r, x));
  CHECK(index_ideal_bound_check(builtin("chain_1"), 0));
  SkewLatticeAlgebra m2 = builtin("M2");
  for (ElementId x = 0; x < m2.size; ++x) CHECK(index_ideal_bound_check(m2, x));
}
