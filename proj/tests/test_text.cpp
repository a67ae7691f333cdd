#include <doctest.h>

#include "gsr/text.hpp"
#include "support/generators.hpp"

using namespace gsr;

namespace {

Poly zp(std::vector<long> c) { return Poly::from_ints(Ring::Z, c); }

}  // namespace

TEST_CASE("parsing the documented forms") {
  CHECK(parse_poly("x^2+3*x+2", Ring::Z) == zp({2, 3, 1}));
  CHECK(parse_poly("x + x", Ring::Z) == zp({0, 2}));
  CHECK(parse_poly("-x^2 + 1", Ring::Z) == zp({1, 0, -1}));
  CHECK(parse_poly("0", Ring::Z).is_zero());
  CHECK(parse_poly("x^2 - x^2", Ring::Z).is_zero());
  CHECK(parse_poly("5", Ring::Z) == zp({5}));
  CHECK(parse_poly("(x+1)*(x-1)", Ring::Z) == zp({-1, 0, 1}));
  CHECK(parse_poly("2*x^3", Ring::Z) == zp({0, 0, 0, 2}));
  CHECK(parse_poly("123456789012345678901234567890", Ring::Z) ==
        Poly::constant(RingElem::integer(Ring::Z,
                                         Int("123456789012345678901234567890"))));

  Poly p = parse_poly("(y+1)*x - y", Ring::ZY);
  CHECK(p.coeff(1) == RingElem::ypoly({1, 1}));
  CHECK(p.coeff(0) == RingElem::ypoly({0, -1}));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_poly("x^2 +", Ring::Z), parse_error);
  CHECK_THROWS_AS(parse_poly("x**2", Ring::Z), parse_error);
  CHECK_THROWS_AS(parse_poly("(x+1", Ring::Z), parse_error);
  CHECK_THROWS_AS(parse_poly("x 2", Ring::Z), parse_error);
  CHECK_THROWS_AS(parse_poly("", Ring::Z), parse_error);
  try {
    parse_poly("x + %", Ring::Z);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("y is rejected under ring z") {
  CHECK_THROWS_AS(parse_poly("y + 1", Ring::Z), parse_error);
  CHECK(parse_poly("y + 1", Ring::ZY) ==
        Poly::constant(RingElem::ypoly({1, 1})));
}

TEST_CASE("printing uses canonical descending form") {
  CHECK(to_string(zp({2, 3, 1})) == "x^2+3*x+2");
  CHECK(to_string(zp({1, -3, 1})) == "x^2-3*x+1");
  CHECK(to_string(zp({0, -1})) == "-x");
  CHECK(to_string(Poly::zero(Ring::Z)) == "0");
  CHECK(to_string(zp({-7})) == "-7");
  CHECK(to_string(parse_poly("(y+1)*x^2 - 2*y*x + 3", Ring::ZY)) ==
        "(y+1)*x^2-2*y*x+3");
  CHECK(to_string(RingElem::ypoly({1, 0, -2})) == "-2*y^2+1");
}

TEST_CASE("print then parse is the identity") {
  testing::Rng rng(808);
  for (int i = 0; i < 150; ++i) {
    Ring r = i % 2 ? Ring::Z : Ring::ZY;
    Poly p = rng.poly(r, rng.uniform(0, 7), 3, 16, false);
    CHECK(parse_poly(to_string(p), r) == p);
  }
}
