// Acceptance gate: runs every criterion at full scale and prints one
// pass/fail line each.  Exits nonzero if any criterion fails.

#include <cstdio>

#include "cpoly/suite.hpp"

int main(int argc, char** argv) {
  cpoly::SuiteOptions opt;
  opt.seed = 0;
  opt.count_scale = 1.0;
  opt.verify_samples = 100000;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);

  bool all = true;
  cpoly::run_acceptance_suite(opt, [&](const cpoly::CheckResult& r) {
    std::printf("%s  criterion %-55s (%6.2fs)  %s\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  });
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
