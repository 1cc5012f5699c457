#include <sstream>

#include "doctest.h"
#include "skewlat/io.hpp"

using namespace skewlat;

TEST_CASE("print then parse is the identity") {
  for (const char* name : {"NC5R", "NC5L", "chain_3", "M2"}) {
    SkewLatticeAlgebra s = builtin(name);
    const std::string text = print_algebra(s);
    std::istringstream in(text);
    SkewLatticeAlgebra back = parse_algebra(in);
    CHECK(back.size == s.size);
    CHECK(back.meet == s.meet);
    CHECK(back.join == s.join);
    CHECK(back.names == s.names);
    CHECK(print_algebra(back) == text);
  }
}

TEST_CASE("comments and loose whitespace are accepted") {
  const std::string text =
      "# a two-element chain\n"
      "skewlat 1\n"
      "n 2\n"
      "meet   # section\n"
      " 0 0\n"
      "\t0 1\n"
      "join\n"
      "0 1\n"
      "1 1\n";
  std::istringstream in(text);
  SkewLatticeAlgebra s = parse_algebra(in);
  CHECK(s.size == 2);
  CHECK_FALSE(s.has_names());
  CHECK(s.meet_of(0, 1) == 0);
}

TEST_CASE("structural errors are distinguished from law failures") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_algebra(in);
  };

  // Out-of-range entry.
  try {
    parse("skewlat 1\nn 2\nmeet\n0 0\n0 1\njoin\n0 7\n1 1\n");
    FAIL("expected a structural error");
  } catch (const AlgebraFileError& e) {
    CHECK(e.kind == AlgebraFileError::Kind::structural);
  }

  CHECK_THROWS_AS(parse("skewlat 2\nn 1\nmeet\n0\njoin\n0\n"),
                  AlgebraFileError);
  CHECK_THROWS_AS(parse("skewlat 1\nn 2\nnames x x\nmeet\n0 0\n0 1\njoin\n0 "
                        "1\n1 1\n"),
                  AlgebraFileError);
  CHECK_THROWS_AS(parse("skewlat 1\nn 1\nmeet\n0\njoin\n0\nextra\n"),
                  AlgebraFileError);

  // Valid tables that break a law: meet cyclic, join constant.
  try {
    parse("skewlat 1\nn 2\nmeet\n0 1\n0 1\njoin\n0 0\n0 1\n");
    FAIL("expected a law failure");
  } catch (const AlgebraFileError& e) {
    CHECK(e.kind == AlgebraFileError::Kind::law);
  }
}

TEST_CASE("argument loading falls back to builtins") {
  SkewLatticeAlgebra s = load_algebra_argument("NC5R");
  CHECK(s.size == 5);
  CHECK_THROWS_AS(load_algebra_argument("definitely_missing"),
                  AlgebraFileError);
}

TEST_CASE("element resolution prefers names") {
  SkewLatticeAlgebra named = builtin("NC5R");
  CHECK(resolve_element(named, "1") == 4);  // the element named "1"
  CHECK(resolve_element(named, "a") == 1);
  CHECK_THROWS_AS(resolve_element(named, "z"), std::invalid_argument);

  SkewLatticeAlgebra bare = make_rectangular(2, 2);
  CHECK(resolve_element(bare, "3") == 3);
  CHECK_THROWS_AS(resolve_element(bare, "9"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_element(bare, "x"), std::invalid_argument);
}
