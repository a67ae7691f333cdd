#pragma once

#include <optional>
#include <vector>

#include "gsr/ring.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

// Rectangular matrix of shifted coefficient rows, highest power leftmost.
struct DetMatrix {
  Ring ring = Ring::Z;
  int nrows = 0;
  int ncols = 0;
  std::vector<RingElem> cells;  // row-major

  RingElem& at(int i, int j) { return cells[static_cast<size_t>(i) * ncols + j]; }
  const RingElem& at(int i, int j) const {
    return cells[static_cast<size_t>(i) * ncols + j];
  }

  friend bool operator==(const DetMatrix&, const DetMatrix&) = default;
};

// Split of the nrows-1 fixed columns: a from the left end, the remaining
// nrows-1-a from the right end.
struct SplitSpec {
  int a = 0;
};

// Determinant polynomial of a matrix under a column split, with its extreme
// free-column determinants (the formal leading and trailing coefficients).
struct SubresPoly {
  Poly poly;
  RingElem flc;
  RingElem ftc;
  int k = -1;
  int a = 0;
};

// Exact determinant by fraction-free (Bareiss) elimination; every interior
// division is exact over an integral domain.
RingElem bareiss_det(DetMatrix M);

// Standard (m+n) x (m+n) Sylvester matrix.  pre: f, g != 0, not both constant.
DetMatrix sylvester_matrix(const Poly& f, const Poly& g);

// Rows x^k f .. f, x^(k+delta1) g .. g with delta1 = deg f - deg g.
// pre: f, g full, deg f >= deg g >= 1, 0 <= k < deg g.
DetMatrix build_mk(const Poly& f, const Poly& g, int k);

// Classical subresultant matrix: n-k rows of f, m-k rows of g.
// pre: deg f = m >= deg g = n >= 1, 0 <= k < n.
DetMatrix build_sk(const Poly& f, const Poly& g, int k);

// For each free column c, the determinant of (a left-fixed columns, c,
// nrows-1-a right-fixed columns) becomes the coefficient of x^(ncols-1-c).
// pre: ncols >= nrows, 0 <= a <= nrows-1.
SubresPoly det_poly(const DetMatrix& M, SplitSpec s);

// build_sk + det_poly; a defaults to nrows-1 (the classical split).
SubresPoly subresultant_sk(const Poly& f, const Poly& g, int k,
                           std::optional<int> a = std::nullopt);

// Smallest d with flc(S_d) != 0 under the chosen split; equals deg gcd(f, g)
// for the default split.  pre: f, g full and nonzero.
int gcd_degree_detect(const Poly& f, const Poly& g,
                      std::optional<int> a = std::nullopt);

// Vanishing pattern of the generalized subresultant chain, with the degree
// detected under three readings of the stopping condition.
struct GcdDegreeReport {
  struct Row {
    int k = 0;
    bool flc_zero = false;
    bool ftc_zero = false;
  };
  std::vector<Row> rows;  // k = 0 .. deg g - 1
  int detected = 0;        // first k with flc != 0
  int detected_strict = 0;  // first k with flc != 0 and ftc != 0
  int detected_weak = 0;    // first k with flc != 0 or ftc != 0
};

GcdDegreeReport gcd_degree_report(const Poly& f, const Poly& g,
                                  std::optional<int> a = std::nullopt);

// Runs the generalized remainder sequence of (f, g) and checks that every
// materialized remainder is matched, up to sign and a ring scalar, by a
// split-column determinant polynomial of the matrix at each of its two
// candidate indices (its own degree and one below the divisor's degree),
// for some split a.  pre: f, g full, deg f >= deg g >= 1.
bool verify_prs_det_correspondence(const Poly& f, const Poly& g, SizeMeasure m);

}  // namespace gsr
