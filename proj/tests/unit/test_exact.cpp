#include <doctest.h>

#include <latloc/exact.hpp>

using namespace latloc;

TEST_CASE("rational floors and ceilings handle signs exactly") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(6, 2)) == 3);
  CHECK(rat_floor(Rat(-6, 2)) == -3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_ceil(Rat(0)) == 0);
}

TEST_CASE("parse_rational round-trips integers and fractions") {
  CHECK(parse_rational("5") == Rat(5));
  CHECK(parse_rational("-5") == Rat(-5));
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational(" 10/4 ") == Rat(5, 2));  // canonicalized
  CHECK(rational_to_string(Rat(5, 2)) == "5/2");
  CHECK(rational_to_string(Rat(-4, 2)) == "-2");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("a/2"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/"), parse_error);
}

TEST_CASE("weight_to_string formats tuples") {
  CHECK(weight_to_string({Int(1), Int(-2), Int(3)}) == "(1,-2,3)");
  CHECK(weight_to_string({}) == "()");
}
