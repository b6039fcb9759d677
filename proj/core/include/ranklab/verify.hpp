#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ranklab/cache.hpp"

namespace ranklab {

struct VerifyOptions {
  std::filesystem::path out_dir = "out";
  uint64_t seed = 0;
  int n = 1, p = 3;             // semigroup suite
  long long weil_pairs = 10000;  // per group in the weil suite
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<std::string> checks;    // "ok ..." or "FAIL ..."
  std::vector<std::string> findings;  // reported only
  double seconds = 0;
};

// tables, weil, fixedpoints, semigroup, span, eta, ranks, sps, etaformula, crtable
const std::vector<std::string>& suite_names();
// Any exception inside a suite is recorded as a failed check.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt, TableStore& store);

}  // namespace ranklab
