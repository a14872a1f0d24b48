#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cpoly/geom.hpp"

namespace cpoly {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<std::string> log;  // e.g. scatter lines
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  double count_scale = 1.0;  // scales the per-check case counts
  std::size_t verify_samples = 100000;
};

/// Run every acceptance check; emits one result per criterion.  on_result,
/// when set, is called as each check finishes.
std::vector<CheckResult> run_acceptance_suite(
    const SuiteOptions& opt,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace cpoly
