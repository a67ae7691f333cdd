#pragma once

#include <optional>
#include <vector>

#include "gsr/ring.hpp"
#include "gsr/subresultant.hpp"
#include "gsr/upoly.hpp"

// Independent reference computations the implementation is checked against.
// Everything here is deliberately naive.
namespace gsr::testing {

// First-row Laplace expansion, no shortcuts.  Intended for tiny matrices.
inline RingElem cofactor_det_impl(const DetMatrix& M, unsigned row,
                                  unsigned colmask) {
  if (row == static_cast<unsigned>(M.nrows)) return RingElem::one(M.ring);
  RingElem acc = RingElem::zero(M.ring);
  int parity = 0;
  for (int c = 0; c < M.ncols; ++c) {
    if (colmask & (1u << c)) continue;
    const RingElem& v = M.at(static_cast<int>(row), c);
    if (!v.is_zero()) {
      RingElem sub = cofactor_det_impl(M, row + 1, colmask | (1u << c));
      RingElem term = v * sub;
      acc = (parity % 2 == 0) ? acc + term : acc - term;
    }
    ++parity;
  }
  return acc;
}

inline RingElem cofactor_det(const DetMatrix& M) {
  return cofactor_det_impl(M, 0, 0);
}

// Minor expansion with memoization on the set of remaining columns; still a
// pure Laplace computation, just fast enough for 12x12 matrices.
class LaplaceDet {
 public:
  explicit LaplaceDet(std::vector<std::vector<RingElem>> rows, Ring ring)
      : rows_(std::move(rows)),
        ring_(ring),
        memo_(1u << rows_.size()) {}

  RingElem run() {
    if (rows_.empty()) return RingElem::one(ring_);
    unsigned full = (1u << rows_.size()) - 1;
    return solve(full);
  }

 private:
  RingElem solve(unsigned mask) {
    if (mask == 0) return RingElem::one(ring_);
    if (memo_[mask]) return *memo_[mask];
    unsigned row = rows_.size() - static_cast<unsigned>(__builtin_popcount(mask));
    RingElem acc = RingElem::zero(ring_);
    int parity = 0;
    for (unsigned c = 0; c < rows_.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      const RingElem& v = rows_[row][c];
      if (!v.is_zero()) {
        RingElem term = v * solve(mask & ~(1u << c));
        acc = (parity % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    memo_[mask] = acc;
    return acc;
  }

  std::vector<std::vector<RingElem>> rows_;
  Ring ring_;
  std::vector<std::optional<RingElem>> memo_;
};

// Textbook k-th subresultant of (f, g): the matrix has n-k shifted rows of f
// and m-k shifted rows of g over m+n-k columns (descending powers), and the
// coefficient of x^j is the minor formed by the first m+n-2k-1 columns plus
// the column of power j.  Built from scratch, independent of DetMatrix.
inline Poly textbook_subresultant(const Poly& f, const Poly& g, int k) {
  const int m = f.degree(), n = g.degree();
  const int nrows = m + n - 2 * k;
  const int ncols = m + n - k;

  auto row_of = [&](const Poly& p, int alpha) {
    std::vector<RingElem> row(static_cast<size_t>(ncols),
                              RingElem::zero(f.ring()));
    for (int j = 0; j < ncols; ++j) row[static_cast<size_t>(j)] = p.coeff(ncols - 1 - j - alpha);
    return row;
  };
  std::vector<std::vector<RingElem>> rows;
  rows.reserve(static_cast<size_t>(nrows));
  for (int alpha = n - k - 1; alpha >= 0; --alpha) rows.push_back(row_of(f, alpha));
  for (int beta = m - k - 1; beta >= 0; --beta) rows.push_back(row_of(g, beta));

  std::vector<RingElem> coeffs(static_cast<size_t>(k) + 1,
                               RingElem::zero(f.ring()));
  for (int j = 0; j <= k; ++j) {
    std::vector<std::vector<RingElem>> square;
    square.reserve(static_cast<size_t>(nrows));
    for (const auto& r : rows) {
      std::vector<RingElem> sq;
      sq.reserve(static_cast<size_t>(nrows));
      for (int c = 0; c < nrows - 1; ++c) sq.push_back(r[static_cast<size_t>(c)]);
      sq.push_back(r[static_cast<size_t>(ncols - 1 - j)]);
      square.push_back(std::move(sq));
    }
    coeffs[static_cast<size_t>(j)] = LaplaceDet(std::move(square), f.ring()).run();
  }
  return Poly::from_coeffs(f.ring(), std::move(coeffs));
}

inline Int pow2_by_doubling(int e) {
  Int v = 1;
  for (int i = 0; i < e; ++i) v = v + v;
  return v;
}

}  // namespace gsr::testing
