#include "gsr/ring.hpp"

#include <algorithm>
#include <utility>

#include "gsr/prs.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

namespace {

void check_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring())
    throw usage_error("mixed-ring operands");
}

// Z[y] elements reuse the generic univariate machinery by viewing the
// coefficient list as a polynomial over Z.
Poly as_xpoly(const RingElem& a) {
  std::vector<RingElem> c;
  c.reserve(a.coeffs().size());
  for (const Int& v : a.coeffs()) c.push_back(RingElem::integer(Ring::Z, v));
  return Poly::from_coeffs(Ring::Z, std::move(c));
}

RingElem as_yelem(const Poly& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const RingElem& e : p.coeffs())
    c.push_back(e.is_zero() ? Int(0) : e.coeffs().front());
  return RingElem::ypoly(std::move(c));
}

}  // namespace

RingElem::RingElem(Ring r, std::vector<Int> c) : ring_(r), c_(std::move(c)) {
  trim();
}

void RingElem::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RingElem RingElem::zero(Ring r) { return RingElem(r, {}); }

RingElem RingElem::one(Ring r) { return RingElem(r, {Int(1)}); }

RingElem RingElem::integer(Ring r, Int v) {
  return RingElem(r, {std::move(v)});
}

RingElem RingElem::ypoly(std::vector<Int> coeffs) {
  return RingElem(Ring::ZY, std::move(coeffs));
}

bool RingElem::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool RingElem::is_unit() const {
  return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

int RingElem::ydeg() const {
  if (is_zero()) throw usage_error("ydeg of zero");
  return static_cast<int>(c_.size()) - 1;
}

const Int& RingElem::lead_int() const {
  if (is_zero()) throw usage_error("lead_int of zero");
  return c_.back();
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return RingElem(a.ring_, std::move(c));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return RingElem(a.ring_, std::move(c));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return RingElem::zero(a.ring_);
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return RingElem(a.ring_, std::move(c));
}

RingElem RingElem::operator-() const {
  std::vector<Int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return RingElem(ring_, std::move(c));
}

bool try_exact_div(const RingElem& a, const RingElem& b, RingElem& q) {
  check_same_ring(a, b);
  if (b.is_zero()) throw usage_error("exact_div by zero");
  if (a.is_zero()) {
    q = RingElem::zero(a.ring());
    return true;
  }
  if (a.c_.size() < b.c_.size()) return false;
  // Long division from the top; for an exact quotient every leading
  // coefficient division is itself exact over Z.
  std::vector<Int> rem = a.c_;
  std::vector<Int> quot(a.c_.size() - b.c_.size() + 1);
  const Int& blead = b.c_.back();
  for (size_t k = quot.size(); k-- > 0;) {
    Int& top = rem[k + b.c_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), blead.get_mpz_t())) return false;
    Int qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), blead.get_mpz_t());
    for (size_t j = 0; j + 1 < b.c_.size(); ++j) rem[k + j] -= qk * b.c_[j];
    top = 0;
    quot[k] = std::move(qk);
  }
  for (const Int& v : rem)
    if (v != 0) return false;
  q = RingElem(a.ring(), std::move(quot));
  return true;
}

RingElem exact_div(const RingElem& a, const RingElem& b) {
  RingElem q;
  if (!try_exact_div(a, b, q)) throw not_divisible("no exact ring quotient");
  return q;
}

RingElem ring_gcd(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) throw usage_error("gcd(0, 0)");
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.ring() == Ring::Z || (a.ydeg() == 0 && b.ydeg() == 0)) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.coeffs()[0].get_mpz_t(), b.coeffs()[0].get_mpz_t());
    return RingElem::integer(a.ring(), std::move(g));
  }
  return normalize_unit(as_yelem(classic_gcd(as_xpoly(a), as_xpoly(b))));
}

RingElem normalize_unit(const RingElem& a) {
  if (a.is_zero()) return a;
  return a.lead_int() < 0 ? -a : a;
}

RingElem pow(const RingElem& a, int e) {
  if (e < 0) throw usage_error("negative ring exponent");
  RingElem acc = RingElem::one(a.ring());
  RingElem base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

long relative_size(const RingElem& a, SizeMeasure m) {
  if (a.is_zero()) throw usage_error("relative_size of zero");
  switch (m) {
    case SizeMeasure::Bits: {
      size_t bits = 0;
      for (const Int& v : a.coeffs())
        if (v != 0) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
      return static_cast<long>(bits) + a.ydeg();
    }
    case SizeMeasure::Degree:
      return a.ydeg();
    case SizeMeasure::Terms: {
      long n = 0;
      for (const Int& v : a.coeffs())
        if (v != 0) ++n;
      return n;
    }
  }
  throw usage_error("unknown size measure");
}

}  // namespace gsr
