#include "doctest.h"
#include "skewlat/classify.hpp"

using namespace skewlat;

namespace {
const ElementId e0 = 0, ea = 1, eb = 2, ec = 3, e1 = 4;

ElemSet set_of(std::initializer_list<ElementId> xs) {
  ElemSet out;
  for (ElementId x : xs) out.add(x);
  return out;
}
}  // namespace

TEST_CASE("property sweep on the right-handed five-element algebra") {
  SkewLatticeAlgebra r = builtin("NC5R");
  PropertyReport props = properties(r);
  CHECK(props.at("symmetric").holds);
  CHECK_FALSE(props.at("normal").holds);
  CHECK(props.at("distributive").holds);
  CHECK(props.at("meet_distributive").holds);
  CHECK(props.at("quasi_distributive").holds);
  CHECK_FALSE(props.at("rectangular").holds);
  CHECK(props.at("right_handed").holds);
  CHECK_FALSE(props.at("left_handed").holds);
  CHECK_FALSE(props.at("skew_chain").holds);

  // The normality witness replays against the tables.
  const auto& w = props.at("normal").witness;
  REQUIRE(w.size() == 4);
  CHECK(r.meet_of(r.meet3(w[0], w[1], w[2]), w[3]) !=
        r.meet_of(r.meet3(w[0], w[2], w[1]), w[3]));
}

TEST_CASE("property sweep on degenerate cases") {
  PropertyReport rect = properties(make_rectangular(2, 2));
  CHECK(rect.at("rectangular").holds);
  CHECK(rect.at("normal").holds);
  CHECK(rect.at("binormal").holds);
  CHECK(rect.at("skew_chain").holds);

  PropertyReport chain = properties(builtin("chain_3"));
  CHECK(chain.at("symmetric").holds);
  CHECK(chain.at("normal").holds);
  CHECK(chain.at("distributive").holds);
  CHECK_FALSE(chain.at("rectangular").holds);

  PropertyReport n5 = properties(builtin("N5"));
  CHECK_FALSE(n5.at("distributive").holds);
  CHECK_FALSE(n5.at("quasi_distributive").holds);
  CHECK(n5.at("normal").holds);
}

TEST_CASE("center is the union of singleton classes") {
  CHECK(center(builtin("NC5R")) == set_of({e0, ec, e1}));
  CHECK(center(builtin("N5")) == ElemSet::full(5));
  CHECK(center(make_rectangular(2, 2)).empty());
}

TEST_CASE("lattice sections of the five-element algebras") {
  SkewLatticeAlgebra r = builtin("NC5R");
  std::vector<ElemSet> sections = lattice_sections(r);
  REQUIRE(sections.size() == 2);
  CHECK(sections[0] == set_of({e0, ea, ec, e1}));
  CHECK(sections[1] == set_of({e0, eb, ec, e1}));

  std::vector<ElemSet> lat = lattice_sections(builtin("N5"));
  REQUIRE(lat.size() == 1);
  CHECK(lat[0] == ElemSet::full(5));
}

TEST_CASE("skew Boolean structure search") {
  // Not normal: no structure.
  SkewBooleanOutcome r = skew_boolean_structure(builtin("NC5R"));
  CHECK(r.has_zero);
  CHECK_FALSE(r.preconditions_ok);
  CHECK_FALSE(r.structure.has_value());

  // Two-element lattice: classical difference x ^ not-y.
  SkewBooleanOutcome two = skew_boolean_structure(builtin("chain_2"));
  REQUIRE(two.structure.has_value());
  CHECK(two.structure->zero == 0);
  CHECK(two.structure->difference(1, 0) == 1);
  CHECK(two.structure->difference(1, 1) == 0);
  CHECK(two.structure->difference(0, 1) == 0);

  // Primitive right-handed algebra {a,b} above {0}: structure exists.
  SkewLatticeAlgebra prim = restrict_to(builtin("NC5R"), set_of({e0, ea, eb}));
  SkewBooleanOutcome po = skew_boolean_structure(prim);
  REQUIRE(po.structure.has_value());
  for (ElementId x = 0; x < prim.size; ++x)
    for (ElementId y = 0; y < prim.size; ++y) {
      const ElementId mid = prim.meet3(x, y, x);
      const ElementId diff = po.structure->difference(x, y);
      CHECK(prim.join_of(mid, diff) == x);
      CHECK(prim.meet_of(mid, diff) == po.structure->zero);
    }

  // Three-element chain: no complement for the middle element.
  SkewBooleanOutcome chain = skew_boolean_structure(builtin("chain_3"));
  CHECK(chain.has_zero);
  CHECK(chain.preconditions_ok);
  CHECK_FALSE(chain.structure.has_value());
  CHECK(chain.failing_pair.has_value());
}

TEST_CASE("binormal algebras factor as lattice times rectangular") {
  SkewLatticeAlgebra lat = builtin("chain_2");
  auto trivial = schein_factorization(lat);
  REQUIRE(trivial.has_value());
  CHECK(trivial->rectangular_factor.size == 1);
  CHECK(trivial->lattice_factor.size == 2);

  SkewLatticeAlgebra s =
      direct_product(builtin("chain_2"), make_rectangular(2, 2));
  auto fact = schein_factorization(s);
  REQUIRE(fact.has_value());
  CHECK(fact->lattice_factor.size == 2);
  CHECK(fact->rectangular_factor.size == 4);
  CHECK(find_isomorphism(
            s, direct_product(fact->lattice_factor, fact->rectangular_factor))
            .has_value());

  CHECK_THROWS_AS(schein_factorization(builtin("NC5R")),
                  std::invalid_argument);  // not binormal
}

TEST_CASE("normality routes agree") {
  CHECK_FALSE(normality_cross_checks(builtin("NC5R")));
  CHECK(normality_cross_checks(builtin("N5")));
  CHECK(normality_cross_checks(make_rectangular(2, 3)));
  CHECK(normality_cross_checks(
      direct_product(builtin("chain_2"), make_rectangular(1, 2))));
}

TEST_CASE("zero detection") {
  CHECK(detect_zero(builtin("NC5R")) == 0);
  CHECK(detect_zero(builtin("chain_3")) == 0);
  CHECK_FALSE(detect_zero(make_rectangular(2, 2)).has_value());
  SkewLatticeAlgebra no_zero =
      direct_product(builtin("chain_2"), make_rectangular(2, 1));
  CHECK_FALSE(detect_zero(no_zero).has_value());
}
