#include "gsr/subresultant.hpp"

#include <algorithm>
#include <utility>

#include "gsr/prs.hpp"

namespace gsr {

namespace {

// Appends the coefficient row of x^alpha * p: column j holds the
// coefficient of x^(ncols-1-j), so the leftmost column is the highest power.
void push_shifted_row(DetMatrix& M, const Poly& p, int alpha) {
  const int base = static_cast<int>(M.cells.size());
  M.cells.resize(M.cells.size() + static_cast<size_t>(M.ncols),
                 RingElem::zero(M.ring));
  for (int j = 0; j < M.ncols; ++j) {
    int power = M.ncols - 1 - j;
    M.cells[static_cast<size_t>(base + j)] = p.coeff(power - alpha);
  }
  ++M.nrows;
}

}  // namespace

RingElem bareiss_det(DetMatrix M) {
  if (M.nrows != M.ncols) throw usage_error("determinant of non-square matrix");
  const int n = M.nrows;
  if (n == 0) return RingElem::one(M.ring);
  RingElem prev = RingElem::one(M.ring);
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!M.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return RingElem::zero(M.ring);
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(M.at(pivot, j), M.at(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        // Sylvester's identity keeps this division exact.
        M.at(i, j) = exact_div(M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j),
                               prev);
      M.at(i, k) = RingElem::zero(M.ring);
    }
    prev = M.at(k, k);
  }
  RingElem det = M.at(n - 1, n - 1);
  return negate ? -det : det;
}

DetMatrix sylvester_matrix(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw usage_error("sylvester_matrix of the zero polynomial");
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0)
    throw usage_error("sylvester_matrix of two constants");
  DetMatrix M{f.ring(), 0, m + n, {}};
  M.cells.reserve(static_cast<size_t>(m + n) * (m + n));
  for (int i = n - 1; i >= 0; --i) push_shifted_row(M, f, i);
  for (int i = m - 1; i >= 0; --i) push_shifted_row(M, g, i);
  return M;
}

DetMatrix build_mk(const Poly& f, const Poly& g, int k) {
  if (f.is_zero() || g.is_zero() || !f.is_full() || !g.is_full())
    throw not_full("build_mk needs full polynomials");
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  const int m = f.degree(), n = g.degree();
  if (m < n || n < 1) throw usage_error("build_mk needs deg f >= deg g >= 1");
  if (k < 0 || k >= n) throw usage_error("build_mk: k out of range");
  const int delta1 = m - n;
  DetMatrix M{f.ring(), 0, m + k + 1, {}};
  M.cells.reserve(static_cast<size_t>(2 * k + delta1 + 2) * M.ncols);
  for (int alpha = k; alpha >= 0; --alpha) push_shifted_row(M, f, alpha);
  for (int beta = k + delta1; beta >= 0; --beta) push_shifted_row(M, g, beta);
  return M;
}

DetMatrix build_sk(const Poly& f, const Poly& g, int k) {
  if (f.is_zero() || g.is_zero())
    throw usage_error("build_sk of the zero polynomial");
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  const int m = f.degree(), n = g.degree();
  if (m < n || n < 1) throw usage_error("build_sk needs deg f >= deg g >= 1");
  if (k < 0 || k >= n) throw usage_error("build_sk: k out of range");
  DetMatrix M{f.ring(), 0, m + n - k, {}};
  M.cells.reserve(static_cast<size_t>(m + n - 2 * k) * M.ncols);
  for (int alpha = n - k - 1; alpha >= 0; --alpha) push_shifted_row(M, f, alpha);
  for (int beta = m - k - 1; beta >= 0; --beta) push_shifted_row(M, g, beta);
  return M;
}

SubresPoly det_poly(const DetMatrix& M, SplitSpec s) {
  if (M.ncols < M.nrows) throw usage_error("det_poly needs ncols >= nrows");
  if (s.a < 0 || s.a > M.nrows - 1) throw usage_error("det_poly: bad split");
  const int b = M.nrows - 1 - s.a;  // right-fixed column count
  const int lo = s.a, hi = M.ncols - 1 - b;  // free column range

  std::vector<int> cols(static_cast<size_t>(M.nrows));
  for (int j = 0; j < s.a; ++j) cols[static_cast<size_t>(j)] = j;
  for (int j = 0; j < b; ++j)
    cols[static_cast<size_t>(s.a + 1 + j)] = M.ncols - b + j;

  std::vector<RingElem> coeffs(static_cast<size_t>(M.ncols - 1 - s.a) + 1,
                               RingElem::zero(M.ring));
  SubresPoly out;
  out.a = s.a;
  for (int c = lo; c <= hi; ++c) {
    cols[static_cast<size_t>(s.a)] = c;
    DetMatrix sq{M.ring, M.nrows, M.nrows, {}};
    sq.cells.reserve(static_cast<size_t>(M.nrows) * M.nrows);
    for (int i = 0; i < M.nrows; ++i)
      for (int j = 0; j < M.nrows; ++j)
        sq.cells.push_back(M.at(i, cols[static_cast<size_t>(j)]));
    RingElem det = bareiss_det(std::move(sq));
    if (c == lo) out.flc = det;
    if (c == hi) out.ftc = det;
    coeffs[static_cast<size_t>(M.ncols - 1 - c)] = std::move(det);
  }
  out.poly = Poly::from_coeffs(M.ring, std::move(coeffs));
  return out;
}

SubresPoly subresultant_sk(const Poly& f, const Poly& g, int k,
                           std::optional<int> a) {
  DetMatrix M = build_sk(f, g, k);
  SubresPoly out = det_poly(M, SplitSpec{a.value_or(M.nrows - 1)});
  out.k = k;
  return out;
}

int gcd_degree_detect(const Poly& f, const Poly& g, std::optional<int> a) {
  return gcd_degree_report(f, g, a).detected;
}

GcdDegreeReport gcd_degree_report(const Poly& f, const Poly& g,
                                  std::optional<int> a) {
  if (f.is_zero() || g.is_zero() || !f.is_full() || !g.is_full())
    throw not_full("gcd degree detection needs full polynomials");
  const Poly* pf = &f;
  const Poly* pg = &g;
  if (pf->degree() < pg->degree()) std::swap(pf, pg);
  const int n = pg->degree();

  GcdDegreeReport rep;
  rep.detected = rep.detected_strict = rep.detected_weak = n;
  for (int k = 0; k < n; ++k) {
    SubresPoly sp = subresultant_sk(*pf, *pg, k, a);
    bool fz = sp.flc.is_zero(), tz = sp.ftc.is_zero();
    rep.rows.push_back({k, fz, tz});
    if (!fz && rep.detected == n) rep.detected = k;
    if (!fz && !tz && rep.detected_strict == n) rep.detected_strict = k;
    if ((!fz || !tz) && rep.detected_weak == n) rep.detected_weak = k;
    if (rep.detected < n && rep.detected_strict < n && rep.detected_weak < n)
      break;
  }
  return rep;
}

namespace {

// Proportionality up to a ring scalar (of either sign), checked by
// cross-multiplying the coefficient vectors.
bool proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.degree() != q.degree()) return false;
  const RingElem& lp = p.lc();
  const RingElem& lq = q.lc();
  for (int i = 0; i < p.degree(); ++i)
    if (!(p.coeff(i) * lq == q.coeff(i) * lp)) return false;
  return true;
}

bool matched_at_index(const Poly& f, const Poly& g, int subres_index,
                      const Poly& target) {
  const int n = g.degree();
  const int k = n - 1 - subres_index;
  DetMatrix M = build_mk(f, g, k);
  for (int a = M.nrows - 1; a >= 0; --a) {
    SubresPoly sp = det_poly(M, SplitSpec{a});
    if (sp.poly.is_zero()) continue;
    if (proportional(full_reduce(sp.poly).first, target)) return true;
  }
  return false;
}

}  // namespace

bool verify_prs_det_correspondence(const Poly& f, const Poly& g,
                                   SizeMeasure m) {
  if (f.is_zero() || g.is_zero() || !f.is_full() || !g.is_full())
    throw not_full("correspondence check needs full polynomials");
  if (f.degree() < g.degree() || g.degree() < 1)
    throw usage_error("correspondence check needs deg f >= deg g >= 1");

  std::vector<Poly> chain;
  gen_gcd_chain(f, g, m, chain);

  // Each materialized remainder should appear both at the matrix of its own
  // degree and at the one just below its divisor's degree.
  for (size_t t = 2; t < chain.size(); ++t) {
    const Poly& w = chain[t];
    const int own = w.degree();
    const int below = chain[t - 1].degree() - 1;
    if (!matched_at_index(f, g, own, w)) return false;
    if (below != own && !matched_at_index(f, g, below, w)) return false;
  }
  return true;
}

}  // namespace gsr
