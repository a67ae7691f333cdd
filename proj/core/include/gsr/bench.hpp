#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gsr/prs.hpp"
#include "gsr/ring.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

struct BenchCase {
  std::string id;
  Poly f;
  Poly g;
};

inline constexpr std::string_view kCsvHeader =
    "case,algorithm,step,deg_u,deg_v,delta,lambda,kind,max_coeff_size,elapsed_ns";

// Reads newline-separated "f ; g" pairs; '#' starts a comment, blank lines
// are skipped.  Case ids are "1", "2", ... in file order.
std::vector<BenchCase> read_pair_file(std::istream& in, Ring ring);

// One row per step plus a summary row (step column "total"; its delta column
// carries the step count).
void write_trace_rows(std::ostream& out, const std::string& case_id,
                      const PrsTrace& trace);

// Runs both algorithms on every case in a pool of `jobs` workers and writes
// rows in case order.  Also cross-checks that the two gcds agree up to sign.
void run_bench(const std::vector<BenchCase>& cases, SizeMeasure m, int jobs,
               std::ostream& out);

// Deterministic generator for dense Z[y] benchmark inputs whose trailing
// coefficients have strictly smaller y-degree than their leading ones (the
// shape that favors trail elimination).  Used when bench has no input file.
std::vector<BenchCase> make_dense_zy_cases(std::uint64_t seed, int count);

}  // namespace gsr
