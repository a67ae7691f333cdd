#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsr/pseudo_division.hpp"
#include "gsr/ring.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

enum class Algorithm { Classic, Generalized };

// One remainder step of a run.  deg_u/deg_v are the degrees fed into the
// pseudo-division; max_coeff_size is the largest relative_size over the
// adjusted remainder's coefficients (0 for the terminal zero remainder).
struct PrsStep {
  int index = 0;
  int deg_u = 0;
  int deg_v = 0;
  int delta = 0;
  int lambda = 0;
  DivisionKind kind = DivisionKind::Lead;
  long max_coeff_size = 0;
  std::uint64_t elapsed_ns = 0;
};

struct PrsTrace {
  Algorithm algorithm = Algorithm::Classic;
  SizeMeasure measure = SizeMeasure::Bits;
  std::vector<PrsStep> steps;
  std::uint64_t total_ns = 0;
};

// Subresultant remainder-sequence gcd (lead pseudo-division only, remainders
// divided by g*h^delta).  Accepts non-full inputs.  pre: not both zero.
Poly classic_gcd(const Poly& f, const Poly& g);

// Gcd through the generalized remainder sequence: inputs are reduced to full
// primitive parts, each step takes gen_prem under measure m, and remainders
// are adjusted by the G/Gbar/h bookkeeping that keeps every interior
// division exact.  pre: not both zero.
Poly gen_gcd(const Poly& f, const Poly& g, SizeMeasure m);

// Resultant computed by running the generalized sequence to the end and
// returning the final h (0 when the sequence stops at positive degree).
// Equals the Sylvester determinant up to sign.  pre: f, g full and nonzero.
RingElem gen_resultant(const Poly& f, const Poly& g, SizeMeasure m);

// Resultant of arbitrary nonzero polynomials: common x-powers force 0,
// a one-sided x^a factor contributes tc(other)^a.  pre: f, g != 0.
RingElem resultant_any(const Poly& f, const Poly& g, SizeMeasure m);

// Same result as the chosen algorithm, plus the per-step trace.
std::pair<Poly, PrsTrace> run_traced(const Poly& f, const Poly& g,
                                     Algorithm alg, SizeMeasure m);

// Generalized run that also returns the materialized sequence
// u1, u2, u3, ... (full primitive inputs followed by adjusted remainders).
Poly gen_gcd_chain(const Poly& f, const Poly& g, SizeMeasure m,
                   std::vector<Poly>& chain);

}  // namespace gsr
