#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "f5c/drivers.hpp"

namespace f5c {

struct BenchmarkSystem {
  std::string name;
  Ring ring;
  std::vector<Polynomial> generators;
};

/// Homogeneous Katsura-n: n+1 generators in x0..xn and the homogenizing
/// variable h (lowest precedence).
BenchmarkSystem katsura(std::size_t n, std::uint32_t p, OrderKind order = OrderKind::grevlex);

/// Homogeneous Cyclic-n: n generators in x1..xn and h.
BenchmarkSystem cyclic(std::size_t n, std::uint32_t p, OrderKind order = OrderKind::grevlex);

struct CompareOptions {
  bool use_oracle = true;  // also run buchberger_reduced and compare
  bool parallel = true;
  bool skip_rule_rebuild = false;
  bool certified = false;
  std::size_t store_cap = PolyStore::kDefaultCap;
};

struct VariantRun {
  Variant variant;
  RunStats stats;
  std::vector<Polynomial> reduced_basis;
  double seconds = 0.0;
};

struct Comparison {
  std::vector<VariantRun> runs;
  std::vector<Polynomial> oracle_basis;  // empty unless use_oracle
  /// All variants' reduced bases coincide (and match the oracle if run).
  bool agreement = false;
};

Comparison compare_variants(std::span<const Polynomial> F, const Ring& ring,
                            std::span<const Variant> variants, const CompareOptions& options = {});

}  // namespace f5c
