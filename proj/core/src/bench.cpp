#include "gsr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>
#include <utility>

#include "gsr/text.hpp"

namespace gsr {

namespace {

std::string_view kind_name(DivisionKind k) {
  return k == DivisionKind::Lead ? "lead" : "trail";
}

std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::Classic ? "classic" : "generalized";
}

std::string trim(std::string s) {
  const char* ws = " \t\r";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<BenchCase> read_pair_file(std::istream& in, Ring ring) {
  std::vector<BenchCase> cases;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(std::move(line));
    if (line.empty()) continue;
    size_t sep = line.find(';');
    if (sep == std::string::npos || line.find(';', sep + 1) != std::string::npos)
      throw usage_error("line " + std::to_string(lineno) +
                        ": expected exactly one ';' between f and g");
    BenchCase c;
    c.id = std::to_string(cases.size() + 1);
    try {
      c.f = parse_poly(line.substr(0, sep), ring);
      c.g = parse_poly(line.substr(sep + 1), ring);
    } catch (const parse_error& e) {
      throw usage_error("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (c.f.is_zero() || c.g.is_zero())
      throw usage_error("line " + std::to_string(lineno) +
                        ": zero polynomial in pair");
    cases.push_back(std::move(c));
  }
  return cases;
}

void write_trace_rows(std::ostream& out, const std::string& case_id,
                      const PrsTrace& trace) {
  long run_max = 0;
  for (const PrsStep& s : trace.steps) {
    run_max = std::max(run_max, s.max_coeff_size);
    out << case_id << ',' << algorithm_name(trace.algorithm) << ',' << s.index
        << ',' << s.deg_u << ',' << s.deg_v << ',' << s.delta << ','
        << s.lambda << ',' << kind_name(s.kind) << ',' << s.max_coeff_size
        << ',' << s.elapsed_ns << '\n';
  }
  if (trace.steps.empty()) return;
  const PrsStep& first = trace.steps.front();
  out << case_id << ',' << algorithm_name(trace.algorithm) << ",total,"
      << first.deg_u << ',' << first.deg_v << ',' << trace.steps.size()
      << ",0,-," << run_max << ',' << trace.total_ns << '\n';
}

void run_bench(const std::vector<BenchCase>& cases, SizeMeasure m, int jobs,
               std::ostream& out) {
  struct Result {
    PrsTrace classic;
    PrsTrace generalized;
  };
  std::vector<Result> results(cases.size());

  auto work = [&](size_t i) {
    auto [cg, ct] = run_traced(cases[i].f, cases[i].g, Algorithm::Classic, m);
    auto [gg, gt] =
        run_traced(cases[i].f, cases[i].g, Algorithm::Generalized, m);
    if (!eq_up_to_sign(cg, gg))
      throw internal_error("case " + cases[i].id +
                           ": classic and generalized gcd disagree");
    results[i].classic = std::move(ct);
    results[i].generalized = std::move(gt);
  };

  if (jobs <= 1 || cases.size() <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= cases.size() || failed.load()) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    };
    size_t nthreads = std::min(static_cast<size_t>(jobs), cases.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  out << kCsvHeader << '\n';
  for (size_t i = 0; i < cases.size(); ++i) {
    write_trace_rows(out, cases[i].id, results[i].classic);
    write_trace_rows(out, cases[i].id, results[i].generalized);
  }
}

std::vector<BenchCase> make_dense_zy_cases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto rand_in = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto nonzero = [&](int bound) {
    int v = 0;
    while (v == 0) v = rand_in(-bound, bound);
    return v;
  };
  // Dense coefficient in y with degree exactly d.
  auto ycoeff = [&](int d) {
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rand_in(-9, 9);
    c[static_cast<size_t>(d)] = nonzero(9);
    return RingElem::ypoly(std::move(c));
  };
  // Dense in x; the leading coefficient has full y-degree and the trailing
  // one strictly smaller, so trail elimination has the cheaper end.
  auto poly = [&](int xdeg, int lead_ydeg) {
    std::vector<RingElem> c;
    c.reserve(static_cast<size_t>(xdeg) + 1);
    c.push_back(ycoeff(rand_in(0, lead_ydeg - 1)));
    for (int i = 1; i < xdeg; ++i) c.push_back(ycoeff(rand_in(0, lead_ydeg)));
    c.push_back(ycoeff(lead_ydeg));
    return Poly::from_coeffs(Ring::ZY, std::move(c));
  };

  std::vector<BenchCase> cases;
  cases.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    BenchCase c;
    c.id = std::to_string(i + 1);
    int df = rand_in(5, 8);
    int dg = rand_in(3, df);
    int ydeg = rand_in(2, 3);
    c.f = poly(df, ydeg);
    c.g = poly(dg, ydeg);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace gsr
