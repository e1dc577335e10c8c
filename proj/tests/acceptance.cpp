#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "spcsp/oracle.hpp"

using namespace spcsp;

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
  double time_limit;                   // whole suite, seconds; 0 for none
  double case_limit;                   // slowest case, seconds; 0 for none
  std::optional<size_t> known_misses;  // pinned count for a criterion that cannot hold as stated
};

struct Supplement {
  const char* title;
  const char* suite;
};

const Criterion kCriteria[] = {
    {1, "classification goldens", "classify-goldens", 0, 0, {}},
    {2, "orbit oracle equivalence, arity <= 7", "orbit", 600, 0, 2},
    {3, "threshold characterization, arity <= 12", "threshold", 0, 0, 16},
    {4, "packing equivalence", "packing", 300, 0, {}},
    {5, "union lemma as stated", "union", 0, 0, 1217989},
    {6, "AT orbit claim, arities 3,5,7", "at-claim", 0, 0, 8},
    {7, "AN/AT equivalence", "an-at", 0, 0, {}},
    {8, "solver end to end", "solver", 0, 1.0, {}},
    {9, "relaxation Galois soundness", "galois", 0, 0, {}},
    {10, "example polymorphism", "example-function", 0, 0, {}},
};

const Supplement kSupplements[] = {
    {"orbit oracle equivalence, arity <= 13", "orbit-extended"},
    {"threshold characterization, arity <= 24", "threshold-extended"},
    {"union of onesets under <1,{0..a},a+1>", "union-crel"},
    {"union of zerosets under <a,{1..a+1},a+1>", "union-arel"},
    {"AT orbit claim, arities 1..13", "at-claim-extended"},
    {"solver certificates", "solver-certificates"},
};

void print_samples(const SuiteResult& r) {
  for (const auto& s : r.samples) std::printf("    %s\n", s.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions opts;
  if (argc > 1) opts.jobs = std::atoi(argv[1]);
  if (opts.jobs < 1) opts.jobs = 1;

  bool ok = true;
  int passed = 0;
  for (const auto& c : kCriteria) {
    SuiteResult r = run_suite(c.suite, opts);
    bool in_time = (c.time_limit == 0 || r.seconds < c.time_limit) &&
                   (c.case_limit == 0 || r.worst_case_seconds < c.case_limit);
    bool pass = r.passed() && in_time;
    std::printf("criterion %d %s: %s (%zu/%zu cases, %.1f s", c.number, c.title, pass ? "PASS" : "FAIL",
                r.cases - r.failures, r.cases, r.seconds);
    if (c.case_limit > 0) std::printf(", slowest case %.3f s", r.worst_case_seconds);
    std::printf(")\n");
    if (pass) {
      ++passed;
      if (c.known_misses) {
        std::printf("    unexpected pass; expected %zu mismatches\n", *c.known_misses);
        ok = false;
      }
      continue;
    }
    print_samples(r);
    if (!in_time) {
      std::printf("    over the time limit\n");
      ok = false;
    } else if (c.known_misses && r.failures == *c.known_misses) {
      std::printf("    known: %zu mismatches as documented\n", r.failures);
    } else {
      if (c.known_misses) std::printf("    expected exactly %zu mismatches\n", *c.known_misses);
      ok = false;
    }
  }
  std::printf("%d/10 criteria pass\n", passed);

  for (const auto& s : kSupplements) {
    SuiteResult r = run_suite(s.suite, opts);
    std::printf("supplement %s: %s (%zu/%zu cases, %.1f s)\n", s.title, r.passed() ? "PASS" : "FAIL",
                r.cases - r.failures, r.cases, r.seconds);
    if (!r.passed()) {
      print_samples(r);
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
