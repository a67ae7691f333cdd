#include "gsr/upoly.hpp"

#include <algorithm>
#include <utility>

namespace gsr {

namespace {

void check_same_ring(const Poly& p, const Poly& q) {
  if (p.ring() != q.ring()) throw usage_error("mixed-ring operands");
}

const RingElem& zero_of(Ring r) {
  static const RingElem zz = RingElem::zero(Ring::Z);
  static const RingElem zzy = RingElem::zero(Ring::ZY);
  return r == Ring::Z ? zz : zzy;
}

}  // namespace

Poly::Poly(Ring r, std::vector<RingElem> c) : ring_(r), c_(std::move(c)) {
  for (const RingElem& e : c_)
    if (e.ring() != ring_) throw usage_error("coefficient from another ring");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(Ring r) { return constant(RingElem::one(r)); }

Poly Poly::constant(RingElem c) {
  Ring r = c.ring();
  std::vector<RingElem> v;
  v.push_back(std::move(c));
  return Poly(r, std::move(v));
}

Poly Poly::from_coeffs(Ring r, std::vector<RingElem> coeffs) {
  return Poly(r, std::move(coeffs));
}

Poly Poly::from_ints(Ring r, const std::vector<long>& coeffs) {
  std::vector<RingElem> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(RingElem::integer(r, Int(v)));
  return Poly(r, std::move(c));
}

int Poly::degree() const {
  if (is_zero()) throw usage_error("degree of zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

int Poly::trail_degree() const {
  if (is_zero()) throw usage_error("trail_degree of zero polynomial");
  int i = 0;
  while (c_[i].is_zero()) ++i;
  return i;
}

const RingElem& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_of(ring_);
  return c_[static_cast<size_t>(i)];
}

const RingElem& Poly::lc() const {
  if (is_zero()) throw usage_error("lc of zero polynomial");
  return c_.back();
}

const RingElem& Poly::tc() const { return c_[static_cast<size_t>(trail_degree())]; }

Poly operator+(const Poly& p, const Poly& q) {
  check_same_ring(p, q);
  std::vector<RingElem> c(std::max(p.c_.size(), q.c_.size()),
                          RingElem::zero(p.ring_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < p.c_.size()) c[i] = c[i] + p.c_[i];
    if (i < q.c_.size()) c[i] = c[i] + q.c_[i];
  }
  return Poly(p.ring_, std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
  check_same_ring(p, q);
  std::vector<RingElem> c(std::max(p.c_.size(), q.c_.size()),
                          RingElem::zero(p.ring_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < p.c_.size()) c[i] = c[i] + p.c_[i];
    if (i < q.c_.size()) c[i] = c[i] - q.c_[i];
  }
  return Poly(p.ring_, std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
  check_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Poly::zero(p.ring_);
  std::vector<RingElem> c(p.c_.size() + q.c_.size() - 1,
                          RingElem::zero(p.ring_));
  for (size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i].is_zero()) continue;
    for (size_t j = 0; j < q.c_.size(); ++j) {
      if (q.c_[j].is_zero()) continue;
      c[i + j] = c[i + j] + p.c_[i] * q.c_[j];
    }
  }
  return Poly(p.ring_, std::move(c));
}

Poly operator*(const RingElem& s, const Poly& p) {
  if (s.ring() != p.ring()) throw usage_error("mixed-ring operands");
  if (s.is_zero() || p.is_zero()) return Poly::zero(p.ring());
  std::vector<RingElem> c;
  c.reserve(p.c_.size());
  for (const RingElem& e : p.c_) c.push_back(s * e);
  return Poly(p.ring_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<RingElem> c;
  c.reserve(c_.size());
  for (const RingElem& e : c_) c.push_back(-e);
  return Poly(ring_, std::move(c));
}

Poly shift(const Poly& p, int n) {
  if (n < 0) throw usage_error("negative shift");
  if (p.is_zero() || n == 0) return p;
  std::vector<RingElem> c(static_cast<size_t>(n), RingElem::zero(p.ring()));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly::from_coeffs(p.ring(), std::move(c));
}

Poly reverse(const Poly& p) {
  if (!p.is_full()) throw not_full("reverse requires a full polynomial");
  std::vector<RingElem> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly::from_coeffs(p.ring(), std::move(c));
}

std::pair<Poly, int> full_reduce(const Poly& p) {
  if (p.is_zero()) throw usage_error("full_reduce of zero polynomial");
  int t = p.trail_degree();
  std::vector<RingElem> c(p.coeffs().begin() + t, p.coeffs().end());
  return {Poly::from_coeffs(p.ring(), std::move(c)), t};
}

RingElem content(const Poly& p) {
  if (p.is_zero()) throw usage_error("content of zero polynomial");
  RingElem g = RingElem::zero(p.ring());
  for (const RingElem& e : p.coeffs()) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? normalize_unit(e) : ring_gcd(g, e);
    if (g.is_one()) break;
  }
  return g;
}

std::pair<RingElem, Poly> content_primitive(const Poly& p) {
  RingElem cont = content(p);
  std::vector<RingElem> c;
  c.reserve(p.coeffs().size());
  for (const RingElem& e : p.coeffs()) c.push_back(exact_div(e, cont));
  return {std::move(cont),
          normalize_sign(Poly::from_coeffs(p.ring(), std::move(c)))};
}

bool divides(const Poly& p, const Poly& q) {
  if (p.is_zero()) throw usage_error("division by the zero polynomial");
  if (p.ring() != q.ring()) throw usage_error("mixed-ring operands");
  if (q.is_zero()) return true;
  Poly r = q;
  int dp = p.degree();
  while (!r.is_zero() && r.degree() >= dp) {
    RingElem factor;
    if (!try_exact_div(r.lc(), p.lc(), factor)) return false;
    r = r - shift(factor * p, r.degree() - dp);
  }
  return r.is_zero();
}

Poly exact_div(const Poly& p, const RingElem& s) {
  if (s.ring() != p.ring()) throw usage_error("mixed-ring operands");
  std::vector<RingElem> c;
  c.reserve(p.coeffs().size());
  for (const RingElem& e : p.coeffs()) c.push_back(exact_div(e, s));
  return Poly::from_coeffs(p.ring(), std::move(c));
}

bool eq_up_to_sign(const Poly& p, const Poly& q) { return p == q || p == -q; }

Poly normalize_sign(const Poly& p) {
  if (p.is_zero()) return p;
  return p.lc().lead_int() < 0 ? -p : p;
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw usage_error("negative polynomial exponent");
  Poly acc = Poly::one(p.ring());
  Poly base = p;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

}  // namespace gsr
