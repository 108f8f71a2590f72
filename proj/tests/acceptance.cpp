// Acceptance gate: one self-check suite per shipped guarantee, each printed
// as a single pass/fail line.  Runs with a pinned seed; exits nonzero if any
// suite fails or overruns its time budget.

#include <cstdio>
#include <string>
#include <vector>

#include "toric/verify.hpp"

int main() {
  struct Criterion {
    const char* suite;
    const char* summary;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"cones", "cone duality is an involution and face lattices pair up", 10.0},
      {"birch", "moment-map inversion hits its targets and satisfies the binomials", 30.0},
      {"secondary", "triangulation enumeration matches the oracles and minimizers", 60.0},
      {"orbits", "one-parameter limits recover fans and detect incompleteness", 30.0},
      {"monoid", "fan points form a commutative monoid compatible with cones", 10.0},
      {"embedding", "orbit embeddings are injective and moment-compatible", 30.0},
      {"moduli", "translated varieties converge to the predicted complexes", 300.0},
      {"determinism", "outputs are byte-identical across seeds and thread counts", 120.0},
  };

  const uint64_t seed = 0x5eed;
  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    toric::SuiteResult r;
    try {
      r = toric::run_suite(criteria[i].suite, seed);
    } catch (const std::exception& e) {
      r = {criteria[i].suite, false, std::string("exception: ") + e.what(), 0.0};
    }
    bool in_budget = r.seconds <= criteria[i].budget_seconds;
    bool pass = r.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("%s  criterion %zu (%s): %s [%.2fs/%.0fs]%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].suite, criteria[i].summary, r.seconds, criteria[i].budget_seconds,
                r.pass ? "" : (std::string(" -- ") + r.details).c_str(),
                in_budget ? "" : " -- over time budget");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
