#include <doctest.h>

#include "gsr/pseudo_division.hpp"
#include "support/generators.hpp"

using namespace gsr;

namespace {

Poly zp(std::vector<long> c) { return Poly::from_ints(Ring::Z, c); }

// Monic linear divisor: prem(f, x-c) is f evaluated at c.
Int eval_at(const Poly& f, long c) {
  Int acc = 0;
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * c + (f.coeff(i).is_zero() ? Int(0) : f.coeff(i).coeffs()[0]);
  return acc;
}

}  // namespace

TEST_CASE("prem matches long division on the worked cases") {
  CHECK(prem(zp({1, 0, 1}), zp({2, 1})) == zp({5}));
  CHECK(prem(zp({1, 0, 1}), zp({2, 1})) ==
        Poly::constant(RingElem::integer(Ring::Z, eval_at(zp({1, 0, 1}), -2))));
  CHECK(prem(zp({1, 1, 0, 2}), zp({1, 0, 1})) == zp({1, -1}));
  Poly f = zp({3, 1, 4, 1, 5});
  CHECK(prem(f, f).is_zero());
}

TEST_CASE("prem preconditions") {
  CHECK_THROWS_AS(prem(zp({1, 1}), Poly::zero(Ring::Z)), usage_error);
  CHECK_THROWS_AS(prem(zp({1, 1}), zp({1, 1, 1})), usage_error);
  CHECK_THROWS_AS(prem(Poly::zero(Ring::Z), zp({1, 1})), usage_error);
}

TEST_CASE("prem contract: lc(v)^(delta+1) u - r is divisible by v") {
  testing::Rng rng(505);
  for (int i = 0; i < 200; ++i) {
    int dv = rng.uniform(0, 6);
    int du = rng.uniform(dv, 8);
    Poly u = rng.poly_z(du, 12, false);
    Poly v = rng.poly_z(dv, 12, false);
    Poly r = prem(u, v);
    if (!r.is_zero()) CHECK(r.degree() < v.degree());
    Poly scaled = Poly::constant(pow(v.lc(), du - dv + 1)) * u;
    CHECK(divides(v, scaled - r));
  }
}

TEST_CASE("tprem eliminates from the bottom") {
  Poly w = tprem(zp({1, 0, 1}), zp({2, 1}));
  CHECK(w == zp({0, 0, 5}));
  CHECK(tprem(zp({2, 3, 1}), zp({2, 1})).is_zero());
  Poly f = zp({3, 1, 4, 1, 5});
  CHECK(tprem(f, f).is_zero());
  CHECK_THROWS_AS(tprem(zp({0, 1, 1}), zp({1, 1})), not_full);
  CHECK_THROWS_AS(tprem(zp({1, 1, 1}), zp({0, 1})), not_full);
}

TEST_CASE("tprem contract: tc(v)^(delta+1) u - w divisible, trailing gap") {
  testing::Rng rng(506);
  for (int i = 0; i < 200; ++i) {
    int dv = rng.uniform(0, 6);
    int du = rng.uniform(dv, 8);
    Poly u = rng.poly_z(du, 12, true);
    Poly v = rng.poly_z(dv, 12, true);
    Poly w = tprem(u, v);
    int delta = du - dv;
    Poly scaled = Poly::constant(pow(v.coeff(0), delta + 1)) * u;
    CHECK(divides(v, scaled - w));
    if (!w.is_zero()) {
      CHECK(w.trail_degree() >= delta + 1);
      CHECK(w.degree() <= du);
    }
  }
}

TEST_CASE("mirror identity: tprem is prem through the reversal mirror") {
  testing::Rng rng(507);
  for (int i = 0; i < 300; ++i) {
    int dv = rng.uniform(0, 6);
    int du = rng.uniform(dv, 8);
    Poly u = rng.poly_z(du, 12, true);
    Poly v = rng.poly_z(dv, 12, true);
    Poly w = tprem(u, v);
    Poly p = prem(reverse(u), reverse(v));
    if (w.is_zero() || p.is_zero()) {
      CHECK(w.is_zero());
      CHECK(p.is_zero());
      continue;
    }
    Poly lhs = full_reduce(w).first;
    Poly rhs = reverse(full_reduce(p).first);
    CHECK(eq_up_to_sign(lhs, rhs));
  }
}

TEST_CASE("gen_prem picks the smaller divisor end") {
  // lc(v) = 1 is not larger than tc(v) = 3: lead division.
  GenPRemResult a = gen_prem(zp({1, 0, 1}), zp({3, 1}), SizeMeasure::Bits);
  CHECK(a.kind == DivisionKind::Lead);
  CHECK(a.r == zp({10}));
  CHECK(a.delta == 1);
  CHECK(a.lambda == 0);
  CHECK(a.g == RingElem::integer(Ring::Z, 1));
  CHECK(a.gbar == RingElem::integer(Ring::Z, 3));

  // lc(v) = 3 is larger than tc(v) = 1: trail division.
  GenPRemResult b = gen_prem(zp({1, 0, 1}), zp({1, 3}), SizeMeasure::Bits);
  CHECK(b.kind == DivisionKind::Trail);
  CHECK(b.r == zp({10}));
  CHECK(b.delta == 1);
  CHECK(b.lambda == 0);
  CHECK(b.g == RingElem::integer(Ring::Z, 1));
  CHECK(b.gbar == RingElem::integer(Ring::Z, 3));

  // prem = x: one trailing power stripped.
  GenPRemResult c =
      gen_prem(zp({1, 2, 1, 1}), zp({1, 0, 1}), SizeMeasure::Bits);
  CHECK(c.kind == DivisionKind::Lead);  // tie goes to lead
  CHECK(c.r == zp({1}));
  CHECK(c.delta == 1);
  CHECK(c.lambda == 1);
}

TEST_CASE("gen_prem result is full with degree below the divisor") {
  testing::Rng rng(508);
  for (int i = 0; i < 300; ++i) {
    int dv = rng.uniform(1, 6);
    int du = rng.uniform(dv, 8);
    Poly u = rng.poly_z(du, 10, true);
    Poly v = rng.poly_z(dv, 10, true);
    auto m = static_cast<SizeMeasure>(rng.uniform(0, 2));
    GenPRemResult res = gen_prem(u, v, m);
    if (res.r.is_zero()) continue;
    CHECK(res.r.is_full());
    CHECK(res.r.degree() < dv);
    if (res.kind == DivisionKind::Lead && res.lambda == 0)
      CHECK(res.r == prem(u, v));
  }
}

TEST_CASE("gen_prem requires full inputs") {
  CHECK_THROWS_AS(gen_prem(zp({0, 1, 1}), zp({1, 1}), SizeMeasure::Bits),
                  not_full);
  CHECK_THROWS_AS(gen_prem(zp({1, 1, 1}), zp({0, 1}), SizeMeasure::Bits),
                  not_full);
}
