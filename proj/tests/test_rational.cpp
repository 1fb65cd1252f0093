#include "doctest.h"

#include "exdisc/errors.hpp"
#include "exdisc/rational.hpp"

using namespace exdisc;

TEST_CASE("rational parsing accepts p/q, integers and decimals") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-3/4") == rat(-3, 4));
  CHECK(parse_rational("6/8") == rat(3, 4));
  CHECK(parse_rational("2") == rat(2));
  CHECK(parse_rational("-17") == rat(-17));
  CHECK(parse_rational("0.3") == rat(3, 10));
  CHECK(parse_rational("-1.25") == rat(-5, 4));
  CHECK(parse_rational(".5") == rat(1, 2));
  CHECK(parse_rational("2.") == rat(2));
  CHECK(parse_rational(" 1/2 ") == rat(1, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(rat(3, 4)) == "3/4");
  CHECK(to_string(rat(-3, 4)) == "-3/4");
  CHECK(to_string(rat(8, 4)) == "2");
  CHECK(to_string(rat(0)) == "0");
  CHECK(is_integer(rat(8, 4)));
  CHECK_FALSE(is_integer(rat(1, 3)));
}

TEST_CASE("simplest rational in an open interval") {
  CHECK(simplest_in_interval(rat(1, 3), rat(1, 2)) == rat(2, 5));
  CHECK(simplest_in_interval(rat(-1, 3), rat(1, 7)) == rat(0));
  CHECK(simplest_in_interval(rat(5, 2), rat(7, 2)) == rat(3));
  CHECK(simplest_in_interval(rat(-1, 2), rat(-1, 3)) == rat(-2, 5));
  CHECK(simplest_in_interval(rat(0), rat(1, 10)) == rat(1, 11));
  // the target of a pin: 1/3 inside a tight interval around it
  CHECK(simplest_in_interval(rat(333, 1000), rat(334, 1000)) == rat(1, 3));
}
