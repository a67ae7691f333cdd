#pragma once

#include "gsr/ring.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

enum class DivisionKind { Lead, Trail };

// Output of gen_prem: the full part of the chosen pseudo-remainder together
// with the bookkeeping values the remainder-sequence algorithm consumes.
struct GenPRemResult {
  Poly r;          // full part of the pseudo-remainder (full or zero)
  int delta = 0;   // deg u - deg v
  int lambda = 0;  // x-power stripped from the raw remainder (0 when r == 0)
  RingElem g;      // divisor coefficient the dividend was scaled by
  RingElem gbar;   // the divisor's opposite-end coefficient
  DivisionKind kind = DivisionKind::Lead;
};

// Classical pseudo-remainder: the R with lc(v)^(delta+1) * u = Q*v + R and
// deg R < deg v (or R = 0).  pre: v != 0, deg u >= deg v.
Poly prem(const Poly& u, const Poly& v);

// Trail pseudo-remainder, computed by eliminating the low-order coefficients
// of u with the trailing coefficient of v: tc(v)^(delta+1) * u - W is
// divisible by v, and W = 0 or trail_degree(W) >= delta+1.  Mirror of prem
// under coefficient reversal.  pre: u, v full, deg u >= deg v.
Poly tprem(const Poly& u, const Poly& v);

// Chooses lead or trail pseudo-division by comparing the sizes of the
// divisor's extreme coefficients (ties go to lead), strips the superfluous
// x-power from the raw remainder, and reports which scale factors were used.
// pre: u, v full and nonzero, deg u >= deg v.
GenPRemResult gen_prem(const Poly& u, const Poly& v, SizeMeasure m);

}  // namespace gsr
