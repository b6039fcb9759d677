// One line per acceptance criterion. Tables are always built fresh so the
// timing limits in criterion 1 measure a real construction.
#include <cstring>
#include <iostream>

#include "ranklab/report.hpp"
#include "ranklab/verify.hpp"

using namespace ranklab;

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.out_dir = "acceptance_out";
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--out") && i + 1 < argc) opt.out_dir = argv[++i];
    else if (!std::strcmp(argv[i], "-v")) verbose = true;
  }
  TableStore store;
  const auto& names = suite_names();
  std::vector<SuiteResult> results;
  for (const auto& name : names) results.push_back(run_suite(name, opt, store));

  int failed = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    size_t bad = 0;
    for (const auto& c : r.checks) bad += c.rfind("FAIL", 0) == 0;
    std::cout << "criterion " << i + 1 << " [" << r.suite << "] " << (r.passed ? "PASS" : "FAIL") << ": "
              << r.checks.size() - bad << "/" << r.checks.size() << " checks, " << r.findings.size() << " findings, "
              << fixed(r.seconds, 1) << " s\n";
    for (const auto& c : r.checks)
      if (verbose || c.rfind("FAIL", 0) == 0) std::cout << "    " << c << "\n";
    if (verbose)
      for (const auto& f : r.findings) std::cout << "    finding " << f << "\n";
    failed += !r.passed;
  }
  std::cout << (failed ? "acceptance FAILED: " + std::to_string(failed) + " criteria" : std::string("acceptance PASSED"))
            << "\n";
  return failed ? 1 : 0;
}
