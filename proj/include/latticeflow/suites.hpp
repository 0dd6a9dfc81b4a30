#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

struct SuiteResult {
  std::string name;
  bool pass = false;
  int cases = 0;       // instances checked
  std::string detail;  // first failure, or a summary
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 0;                 // 0 = the suite's default
  std::size_t point_guard = 0;   // 0 = the suite's default cap on lattice points per instance
};

// degree3, cells2xn, gb-bound, paco, bvn, volume
std::vector<std::string> suite_names();
// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace lf
