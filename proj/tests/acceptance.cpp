// Usage: acceptance [N ...]  -- runs the listed criteria (default: all).
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "checks.hpp"

using namespace f5c::checks;

int main(int argc, char** argv) {
  using Check = CheckResult (*)();
  const std::vector<Check> criteria{example_golden,         example_trace,
                                    oracle_equivalence,      katsura_zero_reductions,
                                    reduction_counts,        skip_rules_equivalence,
                                    katsura9_iteration_sizes, certified_runs,
                                    property_suites};
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const long n = std::strtol(argv[i], nullptr, 10);
    if (n < 1 || n > static_cast<long>(criteria.size())) {
      std::cerr << "unknown criterion: " << argv[i] << "\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n));
  }
  if (selected.empty()) {
    for (std::size_t n = 1; n <= criteria.size(); ++n) selected.push_back(n);
  }

  int failures = 0;
  for (std::size_t n : selected) {
    CheckResult res;
    try {
      res = criteria[n - 1]();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (res.passed ? "PASS" : "FAIL") << " -- " << res.detail
              << std::endl;
    failures += res.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
