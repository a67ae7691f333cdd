#include <doctest.h>

#include "gsr/ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gsr;

namespace {

RingElem zi(long v) { return RingElem::integer(Ring::Z, Int(v)); }

RingElem yp(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return RingElem::ypoly(std::move(v));
}

}  // namespace

TEST_CASE("integer arithmetic is exact") {
  CHECK(zi(3) + zi(4) == zi(7));
  CHECK(zi(3) * zi(-4) == zi(-12));
  CHECK(-zi(5) == zi(-5));

  // 2^64 * 2^64 has no overflow; checked against repeated doubling.
  RingElem big = RingElem::integer(Ring::Z, Int(1) << 64);
  CHECK((big * big).coeffs()[0] == testing::pow2_by_doubling(128));
}

TEST_CASE("y-polynomial arithmetic") {
  RingElem a = yp({1, 1});   // y+1
  RingElem b = yp({-1, 1});  // y-1
  CHECK(a * b == yp({-1, 0, 1}));
  CHECK(a + b == yp({0, 2}));
  CHECK(a - a == RingElem::zero(Ring::ZY));
}

TEST_CASE("mixed-ring operands are rejected") {
  CHECK_THROWS_AS(zi(1) + yp({1}), usage_error);
  CHECK_THROWS_AS(ring_gcd(zi(2), yp({2})), usage_error);
}

TEST_CASE("exact division") {
  CHECK(exact_div(zi(12), zi(4)) == zi(3));
  CHECK(exact_div(yp({-1, 0, 1}), yp({1, 1})) == yp({-1, 1}));  // (y^2-1)/(y+1)
  CHECK_THROWS_AS(exact_div(zi(7), zi(2)), not_divisible);
  CHECK_THROWS_AS(exact_div(yp({1, 1}), yp({0, 0, 1})), not_divisible);
  CHECK_THROWS_AS(exact_div(zi(1), zi(0)), usage_error);
}

TEST_CASE("exact division round-trips on random divisible pairs") {
  testing::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    RingElem b = rng.zelem(24, true);
    RingElem q = rng.zelem(24, false);
    CHECK(exact_div(q * b, b) == q);
  }
  for (int i = 0; i < 100; ++i) {
    RingElem b = rng.yelem(3, 12, true);
    RingElem q = rng.yelem(3, 12, false);
    CHECK(exact_div(q * b, b) == q);
  }
}

TEST_CASE("ring gcd basics") {
  CHECK(ring_gcd(zi(12), zi(18)) == zi(6));
  CHECK(ring_gcd(zi(-12), zi(0)) == zi(12));
  CHECK(ring_gcd(zi(0), zi(-7)) == zi(7));
  CHECK_THROWS_AS(ring_gcd(zi(0), zi(0)), usage_error);
  // gcd(2y^2+2y, 4y) = 2y
  CHECK(ring_gcd(yp({0, 2, 2}), yp({0, 4})) == yp({0, 2}));
}

TEST_CASE("ring gcd divides both arguments and scales multiplicatively") {
  testing::Rng rng(202);
  for (int i = 0; i < 120; ++i) {
    Ring r = i % 2 ? Ring::Z : Ring::ZY;
    RingElem a = rng.elem(r, 2, 16, true);
    RingElem b = rng.elem(r, 2, 16, true);
    RingElem c = rng.elem(r, 2, 8, true);
    RingElem g = ring_gcd(a, b);
    RingElem q;
    CHECK(try_exact_div(a, g, q));
    CHECK(try_exact_div(b, g, q));
    CHECK(ring_gcd(a * c, b * c) == g * normalize_unit(c));
  }
}

TEST_CASE("relative size measures") {
  CHECK(relative_size(zi(5), SizeMeasure::Bits) == 3);  // 101 in binary
  CHECK(relative_size(zi(-5), SizeMeasure::Bits) == 3);
  CHECK(relative_size(zi(9), SizeMeasure::Degree) == 0);
  CHECK(relative_size(zi(9), SizeMeasure::Terms) == 1);

  RingElem p = yp({1, 0, 0, 1});  // y^3+1
  CHECK(relative_size(p, SizeMeasure::Degree) == 3);
  CHECK(relative_size(p, SizeMeasure::Terms) == 2);
  CHECK(relative_size(p, SizeMeasure::Bits) == 1 + 3);

  CHECK_THROWS_AS(relative_size(zi(0), SizeMeasure::Bits), usage_error);
}

TEST_CASE("bit size is submultiplicative on integers") {
  testing::Rng rng(303);
  for (int i = 0; i < 200; ++i) {
    RingElem a = rng.zelem(40, true);
    RingElem b = rng.zelem(40, true);
    CHECK(relative_size(a * b, SizeMeasure::Bits) <=
          relative_size(a, SizeMeasure::Bits) +
              relative_size(b, SizeMeasure::Bits));
  }
}
