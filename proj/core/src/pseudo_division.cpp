#include "gsr/pseudo_division.hpp"

namespace gsr {

namespace {

void check_division_pre(const Poly& u, const Poly& v) {
  if (u.ring() != v.ring()) throw usage_error("mixed-ring operands");
  if (v.is_zero()) throw usage_error("pseudo-division by zero");
  if (u.is_zero() || u.degree() < v.degree())
    throw usage_error("pseudo-division needs deg u >= deg v");
}

}  // namespace

Poly prem(const Poly& u, const Poly& v) {
  check_division_pre(u, v);
  const int n = v.degree();
  const int delta = u.degree() - n;
  const RingElem& lv = v.lc();
  Poly r = u;
  // Each pass scales r by lc(v) even when the eliminated coefficient is
  // already zero, so the contract lc(v)^(delta+1)*u = Q*v + r holds with
  // that exact power.
  for (int k = delta; k >= 0; --k) {
    RingElem top = r.coeff(n + k);
    r = lv * r - top * shift(v, k);
  }
  return r;
}

Poly tprem(const Poly& u, const Poly& v) {
  if (u.is_zero() || !u.is_full()) throw not_full("tprem: u must be full");
  if (v.is_zero() || !v.is_full()) throw not_full("tprem: v must be full");
  check_division_pre(u, v);
  const int delta = u.degree() - v.degree();
  const RingElem& tv = v.coeff(0);
  Poly w = u;
  // Bottom-up elimination: after pass k the coefficients of x^0..x^k vanish,
  // so the result is zero or has trailing degree at least delta+1.
  for (int k = 0; k <= delta; ++k) {
    RingElem low = w.coeff(k);
    w = tv * w - low * shift(v, k);
  }
  return w;
}

GenPRemResult gen_prem(const Poly& u, const Poly& v, SizeMeasure m) {
  if (u.is_zero() || !u.is_full()) throw not_full("gen_prem: u must be full");
  if (v.is_zero() || !v.is_full()) throw not_full("gen_prem: v must be full");
  check_division_pre(u, v);

  GenPRemResult out;
  out.delta = u.degree() - v.degree();
  const bool lead =
      relative_size(v.lc(), m) <= relative_size(v.coeff(0), m);
  Poly w = lead ? prem(u, v) : prem(reverse(u), reverse(v));
  if (w.is_zero()) {
    out.r = Poly::zero(u.ring());
    out.lambda = 0;
  } else {
    auto [core, lam] = full_reduce(w);
    out.lambda = lam;
    out.r = lead ? core : reverse(core);
  }
  if (lead) {
    out.kind = DivisionKind::Lead;
    out.g = v.lc();
    out.gbar = v.coeff(0);
  } else {
    out.kind = DivisionKind::Trail;
    out.g = v.coeff(0);
    out.gbar = v.lc();
  }
  return out;
}

}  // namespace gsr
