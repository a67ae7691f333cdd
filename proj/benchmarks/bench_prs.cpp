// Microbenchmarks comparing the classic and generalized remainder-sequence
// algorithms on the dense Z[y] inputs where the trailing coefficients are
// cheaper than the leading ones, plus the underlying primitives.

#include <benchmark/benchmark.h>

#include <vector>

#include "gsr/bench.hpp"
#include "gsr/prs.hpp"
#include "gsr/pseudo_division.hpp"
#include "gsr/subresultant.hpp"

namespace {

using namespace gsr;

std::vector<BenchCase> fixed_cases() {
  static const std::vector<BenchCase> cases = make_dense_zy_cases(1234, 8);
  return cases;
}

void BM_ClassicGcd(benchmark::State& state) {
  auto cases = fixed_cases();
  const BenchCase& c = cases[static_cast<size_t>(state.range(0))];
  for (auto _ : state)
    benchmark::DoNotOptimize(classic_gcd(c.f, c.g));
}
BENCHMARK(BM_ClassicGcd)->DenseRange(0, 7);

void BM_GenGcd(benchmark::State& state) {
  auto cases = fixed_cases();
  const BenchCase& c = cases[static_cast<size_t>(state.range(0))];
  for (auto _ : state)
    benchmark::DoNotOptimize(gen_gcd(c.f, c.g, SizeMeasure::Degree));
}
BENCHMARK(BM_GenGcd)->DenseRange(0, 7);

void BM_Prem(benchmark::State& state) {
  auto cases = fixed_cases();
  const BenchCase& c = cases[0];
  const Poly& u = c.f.degree() >= c.g.degree() ? c.f : c.g;
  const Poly& v = c.f.degree() >= c.g.degree() ? c.g : c.f;
  for (auto _ : state)
    benchmark::DoNotOptimize(prem(u, v));
}
BENCHMARK(BM_Prem);

void BM_Tprem(benchmark::State& state) {
  auto cases = fixed_cases();
  const BenchCase& c = cases[0];
  const Poly& u = c.f.degree() >= c.g.degree() ? c.f : c.g;
  const Poly& v = c.f.degree() >= c.g.degree() ? c.g : c.f;
  for (auto _ : state)
    benchmark::DoNotOptimize(tprem(u, v));
}
BENCHMARK(BM_Tprem);

void BM_SylvesterDet(benchmark::State& state) {
  auto cases = fixed_cases();
  const BenchCase& c = cases[static_cast<size_t>(state.range(0))];
  const Poly& f = c.f.degree() >= c.g.degree() ? c.f : c.g;
  const Poly& g = c.f.degree() >= c.g.degree() ? c.g : c.f;
  for (auto _ : state)
    benchmark::DoNotOptimize(bareiss_det(sylvester_matrix(f, g)));
}
BENCHMARK(BM_SylvesterDet)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
