#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// Names of the self-check suites, in their canonical run order.
std::vector<std::string> suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, uint64_t seed);

std::vector<SuiteResult> run_all_suites(uint64_t seed);

}  // namespace toric
