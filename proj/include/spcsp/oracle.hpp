#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spcsp {

struct SuiteOptions {
  uint64_t seed = 1;
  int jobs = 1;
  int max_samples = 5;
};

struct SuiteResult {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  std::vector<std::string> samples;  // first failures, in case order
  std::vector<std::string> notes;
  double seconds = 0;
  double worst_case_seconds = 0;  // slowest single case, where timed

  bool passed() const { return failures == 0; }
};

// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();
// Throws Error(InvalidInput) for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace spcsp
