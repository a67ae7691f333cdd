#include "gsr/prs.hpp"

#include <algorithm>
#include <chrono>

namespace gsr {

namespace {

// h := Gbar * g_new^delta / (G * h^(delta-1)); the delta = 0 case becomes
// h := Gbar * h / G so every exponent stays nonnegative.
RingElem h_update(const RingElem& gbar_acc, const RingElem& g_acc,
                  const RingElem& g_new, const RingElem& h, int delta) {
  RingElem num = gbar_acc * pow(g_new, delta) * pow(h, std::max(0, 1 - delta));
  RingElem den = g_acc * pow(h, std::max(0, delta - 1));
  return exact_div(num, den);
}

long max_coeff_size(const Poly& p, SizeMeasure m) {
  long best = 0;
  for (const RingElem& e : p.coeffs())
    if (!e.is_zero()) best = std::max(best, relative_size(e, m));
  return best;
}

struct EngineOut {
  Poly gcd;
  RingElem tail_h;  // final h when the sequence bottomed out at degree 0
  bool constant_tail = false;
};

std::uint64_t ns_since(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

// Shared remainder-sequence loop.  The classic algorithm is the special
// case with lead pseudo-division only, no x-power stripping and the
// G/Gbar accumulators pinned at 1.
EngineOut run_engine(const Poly& f, const Poly& g, Algorithm alg,
                     SizeMeasure m, PrsTrace* trace,
                     std::vector<Poly>* chain) {
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  if (trace) {
    trace->algorithm = alg;
    trace->measure = m;
    trace->steps.clear();
    trace->total_ns = 0;
  }
  if (chain) chain->clear();

  EngineOut out;
  out.tail_h = RingElem::zero(f.ring());
  if (f.is_zero() && g.is_zero()) throw usage_error("gcd(0, 0)");
  if (f.is_zero() || g.is_zero()) {
    out.gcd = normalize_sign(f.is_zero() ? g : f);
    return out;
  }

  const Ring ring = f.ring();
  const bool general = (alg == Algorithm::Generalized);

  // Reduce to primitive (and, for the generalized run, full) parts; d and e
  // carry the shared content and x-power back into the result.
  RingElem d = ring_gcd(content(f), content(g));
  int e = 0;
  Poly u = content_primitive(f).second;
  Poly v = content_primitive(g).second;
  if (general) {
    e = std::min(f.trail_degree(), g.trail_degree());
    u = full_reduce(u).first;
    v = full_reduce(v).first;
  }
  if (u.degree() < v.degree()) std::swap(u, v);

  RingElem h = RingElem::one(ring);
  RingElem g_state = RingElem::one(ring);
  RingElem g_acc = RingElem::one(ring);     // G = g^lambda of the last step
  RingElem gbar_acc = RingElem::one(ring);  // Gbar = gbar^lambda
  RingElem prev_g = RingElem::one(ring), prev_gbar = RingElem::one(ring);
  int prev_lambda = 0;

  if (chain) {
    chain->push_back(u);
    chain->push_back(v);
  }

  for (int step = 1;; ++step) {
    auto t0 = std::chrono::steady_clock::now();
    const int du = u.degree(), dv = v.degree();
    GenPRemResult pr;
    if (general) {
      pr = gen_prem(u, v, m);
    } else {
      pr.r = prem(u, v);
      pr.delta = u.degree() - v.degree();
      pr.lambda = 0;
      pr.g = v.lc();
      pr.gbar = RingElem::one(ring);
      pr.kind = DivisionKind::Lead;
    }

    if (pr.r.is_zero()) {
      // v is the last nonzero element of the sequence.  A constant tail
      // admits one more h update, whose value is the resultant up to sign.
      if (v.degree() == 0)
        out.tail_h = h_update(gbar_acc, g_acc, pr.g, h, pr.delta);
      out.constant_tail = (v.degree() == 0);
      if (trace) {
        std::uint64_t ns = ns_since(t0);
        trace->steps.push_back(
            {step, du, dv, pr.delta, pr.lambda, pr.kind, 0, ns});
        trace->total_ns += ns;
      }
      out.gcd = normalize_sign(Poly::constant(d) *
                               shift(content_primitive(v).second, e));
      return out;
    }

    // Adjust the remainder, in this order: the divisions below use the
    // previous step's g and h while the h update already sees the new g.
    Poly v_next = exact_div(gbar_acc * pr.r, g_acc * g_state * pow(h, pr.delta));
    RingElem h_next = h_update(gbar_acc, g_acc, pr.g, h, pr.delta);
    RingElem h_law = h_update(pow(prev_gbar, prev_lambda),
                              pow(prev_g, prev_lambda), pr.g, h, pr.delta);
    if (h_next != h_law) throw internal_error("h transformation law violated");

    u = v;
    v = v_next;
    g_state = pr.g;
    h = h_next;
    g_acc = pow(pr.g, pr.lambda);
    gbar_acc = pow(pr.gbar, pr.lambda);
    prev_g = pr.g;
    prev_gbar = pr.gbar;
    prev_lambda = pr.lambda;

    if (trace) {
      std::uint64_t ns = ns_since(t0);
      trace->steps.push_back({step, du, dv, pr.delta, pr.lambda, pr.kind,
                              max_coeff_size(v, m), ns});
      trace->total_ns += ns;
    }
    if (chain) chain->push_back(v);
  }
}

}  // namespace

Poly classic_gcd(const Poly& f, const Poly& g) {
  return run_engine(f, g, Algorithm::Classic, SizeMeasure::Bits, nullptr,
                    nullptr)
      .gcd;
}

Poly gen_gcd(const Poly& f, const Poly& g, SizeMeasure m) {
  return run_engine(f, g, Algorithm::Generalized, m, nullptr, nullptr).gcd;
}

RingElem gen_resultant(const Poly& f, const Poly& g, SizeMeasure m) {
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  if (f.is_zero() || g.is_zero())
    throw usage_error("resultant of the zero polynomial");
  if (!f.is_full() || !g.is_full())
    throw not_full("gen_resultant needs full inputs");
  const Poly* a = &f;
  const Poly* b = &g;
  if (a->degree() < b->degree()) std::swap(a, b);
  const int am = a->degree(), bn = b->degree();
  if (bn == 0) return pow(b->lc(), am);  // res(f, c) = c^deg f

  RingElem ca = content(*a), cb = content(*b);
  EngineOut eo =
      run_engine(*a, *b, Algorithm::Generalized, m, nullptr, nullptr);
  if (!eo.constant_tail) return RingElem::zero(f.ring());
  return pow(ca, bn) * pow(cb, am) * eo.tail_h;
}

RingElem resultant_any(const Poly& f, const Poly& g, SizeMeasure m) {
  if (f.ring() != g.ring()) throw usage_error("mixed-ring operands");
  if (f.is_zero() || g.is_zero())
    throw usage_error("resultant of the zero polynomial");
  const int a = f.trail_degree(), b = g.trail_degree();
  if (a > 0 && b > 0) return RingElem::zero(f.ring());
  Poly fu = full_reduce(f).first;
  Poly gu = full_reduce(g).first;
  // res(x^a u, v) = tc(v)^a res(u, v) up to sign, and symmetrically.
  RingElem factor = pow(gu.coeff(0), a) * pow(fu.coeff(0), b);
  return factor * gen_resultant(fu, gu, m);
}

std::pair<Poly, PrsTrace> run_traced(const Poly& f, const Poly& g,
                                     Algorithm alg, SizeMeasure m) {
  PrsTrace trace;
  Poly gcd = run_engine(f, g, alg, m, &trace, nullptr).gcd;
  return {std::move(gcd), std::move(trace)};
}

Poly gen_gcd_chain(const Poly& f, const Poly& g, SizeMeasure m,
                   std::vector<Poly>& chain) {
  return run_engine(f, g, Algorithm::Generalized, m, nullptr, &chain).gcd;
}

}  // namespace gsr
