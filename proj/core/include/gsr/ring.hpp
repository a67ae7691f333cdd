#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace gsr {

using Int = mpz_class;

// Coefficient rings supported by the library: arbitrary-precision integers,
// and dense integer-coefficient polynomials in y.
enum class Ring { Z, ZY };

// Integer characteristic of a nonzero ring element, used to decide which
// end of a divisor is cheaper to eliminate with.
enum class SizeMeasure { Bits, Degree, Terms };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// No exact quotient exists in the ring.
struct not_divisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The operation needs a polynomial with nonzero trailing coefficient.
struct not_full : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity that must hold exactly failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Element of Z or Z[y].  Stored as a coefficient vector in ascending powers
// of y with no trailing zero entry; the zero element is the empty vector.
// Z-tagged values keep at most one entry.  Values are immutable in practice:
// every operation returns a fresh element.
class RingElem {
 public:
  RingElem() = default;  // zero of Z

  static RingElem zero(Ring r);
  static RingElem one(Ring r);
  static RingElem integer(Ring r, Int v);       // the constant v in ring r
  static RingElem ypoly(std::vector<Int> coeffs);  // ascending powers of y

  Ring ring() const { return ring_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_unit() const;  // +1 or -1
  const std::vector<Int>& coeffs() const { return c_; }

  int ydeg() const;           // degree in y; 0 for Z values.  pre: nonzero
  const Int& lead_int() const;  // leading integer coefficient.  pre: nonzero

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  friend bool operator==(const RingElem& a, const RingElem& b) = default;

 private:
  RingElem(Ring r, std::vector<Int> c);
  void trim();

  Ring ring_ = Ring::Z;
  std::vector<Int> c_;

  friend bool try_exact_div(const RingElem&, const RingElem&, RingElem&);
};

// q with q*b == a, if it exists in the ring; false otherwise.
bool try_exact_div(const RingElem& a, const RingElem& b, RingElem& q);

// Throws not_divisible when no exact quotient exists.  pre: b != 0.
RingElem exact_div(const RingElem& a, const RingElem& b);

// Normalized gcd (Z: nonnegative; Z[y]: positive leading integer).
// The Z[y] case runs the classical subresultant remainder sequence with the
// integer gcd as base case.  pre: not both zero.
RingElem ring_gcd(const RingElem& a, const RingElem& b);

// Multiplies by a unit so the leading integer coefficient is nonnegative.
RingElem normalize_unit(const RingElem& a);

RingElem pow(const RingElem& a, int e);  // pre: e >= 0

// Bits: bit length (Z[y]: max coefficient bit length plus degree in y).
// Degree: degree in y (0 on Z).  Terms: nonzero y-terms (1 on Z).
// pre: a != 0.
long relative_size(const RingElem& a, SizeMeasure m);

}  // namespace gsr
