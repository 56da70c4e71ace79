#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace f5c {

/// Counters for one pass of the outer loop (one new generator).
struct IterationStats {
  std::size_t i = 0;
  std::size_t basis_size = 0;  // #curr when the incremental step finishes
  std::map<unsigned, std::size_t> pairs_by_degree;
  std::uint64_t spolys = 0;           // store appends made while forming S-polynomials
  std::uint64_t reduction_steps = 0;  // elementary steps while reducing S-polynomials
  std::uint64_t interreduction_steps = 0;  // steps spent reducing the previous basis
  std::uint64_t zero_reductions = 0;
  std::uint64_t unsafe_reductions = 0;  // store appends made by top-reduction
  std::uint64_t rewritten = 0;          // components rejected as rewritable
  std::size_t store_size = 0;

  friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

/// Violations found in certified mode; all zero on a correct run.
struct CertificationReport {
  std::uint64_t admissibility_checks = 0;
  std::uint64_t admissibility_violations = 0;
  std::uint64_t rule_order_violations = 0;
  std::uint64_t rewriter_order_violations = 0;

  bool clean() const noexcept {
    return admissibility_violations == 0 && rule_order_violations == 0 &&
           rewriter_order_violations == 0;
  }
  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

struct RunStats {
  std::string algorithm;
  std::vector<IterationStats> iterations;
  std::size_t basis_size_final = 0;
  CertificationReport certification;
  /// Degrees processed inside each incremental step, in order.
  std::vector<std::vector<unsigned>> degree_sequences;

  /// Sums over iterations; `i` and `basis_size` are left at the last
  /// iteration's values.
  IterationStats totals() const;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

}  // namespace f5c
