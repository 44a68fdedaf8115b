#include <doctest.h>

#include <random>

#include "eqcoh/degree.hpp"
#include "eqcoh/error.hpp"

using namespace eqcoh;

TEST_CASE("parse atoms") {
  CHECK(parse_degree("2 - L2 - L3", 6) ==
        VirtualRep::trivial(6, 2) - VirtualRep::lambda(6, 2) - VirtualRep::lambda(6, 3));
  CHECK(parse_degree("rho", 4) == VirtualRep::real_regular(4));
  CHECK(parse_degree("phi(3)", 6) == phi(3, 6));
  CHECK(parse_degree("w(2)", 5) == quat_w(2, 5));
  CHECK(parse_degree("1+s", 2) == VirtualRep::trivial(2, 1) + VirtualRep::sign(2));
  CHECK(parse_degree("  3 L1 -2s ", 4) == VirtualRep::lambda(4, 1, 3) - VirtualRep::sign(4, 2));
  CHECK(parse_degree("-L1", 4) == -VirtualRep::lambda(4, 1));
  CHECK(parse_degree("0", 3).is_zero());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_degree("2 - L2 - Q3", 6);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_degree("", 3), ParseError);
  CHECK_THROWS_AS(parse_degree("2 +", 3), ParseError);
  CHECK_THROWS_AS(parse_degree("phi(2", 3), ParseError);
  CHECK_THROWS_AS(parse_degree("L", 3), ParseError);
}

TEST_CASE("property: printing then parsing is the identity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 24)(rng);
    std::uniform_int_distribution<int> mult(-4, 4);
    VirtualRep v = VirtualRep::trivial(n, mult(rng));
    for (int i = 1; i < n; ++i)
      if (rng() % 3 == 0) v += VirtualRep::lambda(n, i, mult(rng));
    if (n % 2 == 0) v += VirtualRep::sign(n, mult(rng));
    CHECK(parse_degree(v.str(), n) == v);
  }
}
