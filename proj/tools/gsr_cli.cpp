// Command line front end: gcd, resultant, subresultant, gcd-degree
// detection, and a CSV benchmark driver for the two remainder-sequence
// algorithms.
//
// Exit codes: 0 success, 1 usage or parse error, 2 violated internal
// invariant (an exact division that must succeed failed).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "gsr/bench.hpp"
#include "gsr/prs.hpp"
#include "gsr/ring.hpp"
#include "gsr/subresultant.hpp"
#include "gsr/text.hpp"
#include "gsr/upoly.hpp"

namespace {

struct CommonArgs {
  std::string ring = "z";
  std::string measure = "bits";

  gsr::Ring ring_value() const {
    return ring == "zy" ? gsr::Ring::ZY : gsr::Ring::Z;
  }
  gsr::SizeMeasure measure_value() const {
    if (measure == "degree") return gsr::SizeMeasure::Degree;
    if (measure == "terms") return gsr::SizeMeasure::Terms;
    return gsr::SizeMeasure::Bits;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_measure = true) {
  cmd->add_option("--ring", args.ring, "Coefficient ring")
      ->check(CLI::IsMember({"z", "zy"}))
      ->capture_default_str();
  if (with_measure)
    cmd->add_option("--size-measure", args.measure,
                    "Coefficient size measure used by the generalized "
                    "algorithm")
        ->check(CLI::IsMember({"bits", "degree", "terms"}))
        ->capture_default_str();
}

void write_csv(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gsr::usage_error("cannot open " + path + " for writing");
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gsr;

  CLI::App app{"Exact polynomial gcd, resultants and generalized "
               "subresultants over Z and Z[y]"};
  app.require_subcommand(1);

  // gcd
  CommonArgs gcd_args;
  std::string gcd_f, gcd_g, gcd_alg = "generalized", gcd_trace;
  CLI::App* gcd_cmd = app.add_subcommand("gcd", "Greatest common divisor");
  gcd_cmd->add_option("f", gcd_f, "First polynomial")->required();
  gcd_cmd->add_option("g", gcd_g, "Second polynomial")->required();
  add_common(gcd_cmd, gcd_args);
  gcd_cmd->add_option("--algorithm", gcd_alg, "Remainder-sequence algorithm")
      ->check(CLI::IsMember({"classic", "generalized", "both"}))
      ->capture_default_str();
  gcd_cmd->add_option("--trace", gcd_trace, "Write per-step CSV trace here");

  // resultant
  CommonArgs res_args;
  std::string res_f, res_g, res_trace;
  CLI::App* res_cmd = app.add_subcommand("resultant", "Resultant in x");
  res_cmd->add_option("f", res_f, "First polynomial")->required();
  res_cmd->add_option("g", res_g, "Second polynomial")->required();
  add_common(res_cmd, res_args);
  res_cmd->add_option("--trace", res_trace, "Write per-step CSV trace here");

  // subres
  CommonArgs sub_args;
  std::string sub_f, sub_g;
  int sub_k = 0;
  std::optional<int> sub_a;
  CLI::App* sub_cmd = app.add_subcommand(
      "subres", "Generalized subresultant polynomial of index k");
  sub_cmd->add_option("f", sub_f, "First polynomial")->required();
  sub_cmd->add_option("g", sub_g, "Second polynomial")->required();
  add_common(sub_cmd, sub_args, false);
  sub_cmd->add_option("--k", sub_k, "Subresultant index")
      ->capture_default_str();
  sub_cmd->add_option("--a", sub_a,
                      "Columns fixed on the left (default: all, the "
                      "classical split)");

  // detect
  CommonArgs det_args;
  std::string det_f, det_g;
  std::optional<int> det_a;
  CLI::App* det_cmd =
      app.add_subcommand("detect", "Degree of the gcd via subresultants");
  det_cmd->add_option("f", det_f, "First polynomial")->required();
  det_cmd->add_option("g", det_g, "Second polynomial")->required();
  add_common(det_cmd, det_args, false);
  det_cmd->add_option("--a", det_a, "Column split (default: classical)");

  // bench
  CommonArgs bench_args;
  std::string bench_in, bench_trace;
  std::uint64_t bench_seed = 0;
  int bench_jobs = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Run both algorithms over a set of pairs and emit CSV");
  add_common(bench_cmd, bench_args);
  bench_cmd->add_option(
      "--in", bench_in,
      "File of newline-separated \"f ; g\" pairs ('#' comments); when "
      "absent, 30 dense Z[y] pairs are generated from --seed");
  bench_cmd->add_option("--trace", bench_trace,
                        "Output CSV path (default: stdout)");
  bench_cmd->add_option("--seed", bench_seed, "Seed for generated inputs")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench_jobs, "Worker pool size")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gcd_cmd) {
      Ring ring = gcd_args.ring_value();
      SizeMeasure m = gcd_args.measure_value();
      Poly f = parse_poly(gcd_f, ring);
      Poly g = parse_poly(gcd_g, ring);
      std::ostringstream csv;
      csv << kCsvHeader << '\n';
      Poly result(ring);
      if (gcd_alg == "classic") {
        auto [gc, tr] = run_traced(f, g, Algorithm::Classic, m);
        write_trace_rows(csv, "1", tr);
        result = gc;
      } else if (gcd_alg == "generalized") {
        auto [gg, tr] = run_traced(f, g, Algorithm::Generalized, m);
        write_trace_rows(csv, "1", tr);
        result = gg;
      } else {
        auto [gc, tc] = run_traced(f, g, Algorithm::Classic, m);
        auto [gg, tg] = run_traced(f, g, Algorithm::Generalized, m);
        write_trace_rows(csv, "1", tc);
        write_trace_rows(csv, "1", tg);
        if (!eq_up_to_sign(gc, gg))
          throw internal_error("classic and generalized gcd disagree");
        result = gg;
      }
      if (!gcd_trace.empty()) write_csv(gcd_trace, csv.str());
      std::cout << to_string(normalize_sign(result)) << '\n';
    } else if (*res_cmd) {
      Ring ring = res_args.ring_value();
      SizeMeasure m = res_args.measure_value();
      Poly f = parse_poly(res_f, ring);
      Poly g = parse_poly(res_g, ring);
      if (!res_trace.empty()) {
        std::ostringstream csv;
        csv << kCsvHeader << '\n';
        auto [gg, tr] = run_traced(f, g, Algorithm::Generalized, m);
        write_trace_rows(csv, "1", tr);
        write_csv(res_trace, csv.str());
      }
      std::cout << to_string(resultant_any(f, g, m)) << '\n';
    } else if (*sub_cmd) {
      Ring ring = sub_args.ring_value();
      Poly f = parse_poly(sub_f, ring);
      Poly g = parse_poly(sub_g, ring);
      if (!f.is_zero() && !g.is_zero() && f.degree() < g.degree())
        std::swap(f, g);
      SubresPoly sp = subresultant_sk(f, g, sub_k, sub_a);
      std::cout << to_string(normalize_sign(sp.poly)) << '\n';
    } else if (*det_cmd) {
      Ring ring = det_args.ring_value();
      Poly f = parse_poly(det_f, ring);
      Poly g = parse_poly(det_g, ring);
      std::cout << gcd_degree_detect(f, g, det_a) << '\n';
    } else if (*bench_cmd) {
      Ring ring = bench_args.ring_value();
      std::vector<BenchCase> cases;
      if (bench_in.empty()) {
        if (ring != Ring::ZY)
          throw usage_error(
              "bench without --in generates Z[y] inputs; pass --ring zy "
              "or an input file");
        cases = make_dense_zy_cases(bench_seed, 30);
      } else {
        std::ifstream in(bench_in);
        if (!in) throw usage_error("cannot open " + bench_in);
        cases = read_pair_file(in, ring);
      }
      std::ostringstream csv;
      run_bench(cases, bench_args.measure_value(), std::max(1, bench_jobs),
                csv);
      write_csv(bench_trace, csv.str());
    }
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const not_divisible& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
