#pragma once

#include <utility>
#include <vector>

#include "gsr/ring.hpp"

namespace gsr {

// Dense univariate polynomial in x over Z or Z[y].  Coefficients are stored
// ascending (index i = coefficient of x^i) with no zero leading entry; the
// zero polynomial has an empty list.  A polynomial is "full" when its
// constant coefficient is nonzero, i.e. it is not divisible by x.
//
// There is deliberately no degree sentinel for zero: degree() and
// trail_degree() reject the zero polynomial, so callers must branch on
// is_zero() before doing degree arithmetic.
class Poly {
 public:
  explicit Poly(Ring r = Ring::Z) : ring_(r) {}

  static Poly zero(Ring r) { return Poly(r); }
  static Poly one(Ring r);
  static Poly constant(RingElem c);
  // Ascending coefficients; trailing zeros are trimmed, rings are checked.
  static Poly from_coeffs(Ring r, std::vector<RingElem> coeffs);
  static Poly from_ints(Ring r, const std::vector<long>& coeffs);

  Ring ring() const { return ring_; }
  bool is_zero() const { return c_.empty(); }
  bool is_full() const { return !c_.empty() && !c_.front().is_zero(); }

  int degree() const;        // pre: nonzero
  int trail_degree() const;  // index of lowest nonzero coefficient; pre: nonzero

  // Zero outside the stored band.
  const RingElem& coeff(int i) const;
  const RingElem& lc() const;  // leading coefficient; pre: nonzero
  const RingElem& tc() const;  // lowest nonzero coefficient; pre: nonzero
  const std::vector<RingElem>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const RingElem& s, const Poly& p);
  Poly operator-() const;
  friend bool operator==(const Poly& p, const Poly& q) = default;

 private:
  Poly(Ring r, std::vector<RingElem> c);
  void trim();

  Ring ring_;
  std::vector<RingElem> c_;
};

Poly shift(const Poly& p, int n);  // p * x^n, n >= 0

// Coefficient list reversed.  pre: p full and nonzero (throws not_full), so
// that the degree is preserved and reversal is an involution.
Poly reverse(const Poly& p);

// (p / x^trail_degree(p), trail_degree(p)).  First component is full.
std::pair<Poly, int> full_reduce(const Poly& p);  // pre: p != 0

RingElem content(const Poly& p);  // gcd of all coefficients; pre: p != 0

// (cont(p), primitive part).  Both are normalized: the content has positive
// leading integer, and so does the primitive part's leading coefficient, so
// cont * primitive = p up to sign.
std::pair<RingElem, Poly> content_primitive(const Poly& p);  // pre: p != 0

// True iff p divides q exactly over the ring.  pre: p != 0.
bool divides(const Poly& p, const Poly& q);

// Coefficient-wise exact division by a ring scalar.  pre: s != 0.
Poly exact_div(const Poly& p, const RingElem& s);

bool eq_up_to_sign(const Poly& p, const Poly& q);

// Negates if needed so the leading coefficient's leading integer is positive.
Poly normalize_sign(const Poly& p);

Poly pow(const Poly& p, int e);  // pre: e >= 0

}  // namespace gsr
