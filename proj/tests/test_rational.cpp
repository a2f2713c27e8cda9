#include <doctest.h>

#include "mimodof/rational.hpp"

using namespace mimodof;

TEST_CASE("rational formatting is p/q reduced with positive denominator") {
  CHECK(format_rat(Rat(1, 3)) == "1/3");
  CHECK(format_rat(Rat(2, 6)) == "1/3");
  CHECK(format_rat(Rat(4)) == "4");
  CHECK(format_rat(Rat(0)) == "0");
  CHECK(format_rat(Rat(-3, 9)) == "-1/3");
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(parse_rat("7/3") == Rat(7, 3));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat("10/5") == Rat(2));
  CHECK(format_rat(parse_rat("123/456")) == "41/152");
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("positive part") {
  CHECK(pos_part(Rat(-5, 2)) == Rat(0));
  CHECK(pos_part(Rat(5, 2)) == Rat(5, 2));
  CHECK(pos_part(Rat(0)) == Rat(0));
}
