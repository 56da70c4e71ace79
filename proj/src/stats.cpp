#include "f5c/stats.hpp"

namespace f5c {

IterationStats RunStats::totals() const {
  IterationStats t;
  for (const IterationStats& it : iterations) {
    t.i = it.i;
    t.basis_size = it.basis_size;
    for (const auto& [d, n] : it.pairs_by_degree) t.pairs_by_degree[d] += n;
    t.spolys += it.spolys;
    t.reduction_steps += it.reduction_steps;
    t.interreduction_steps += it.interreduction_steps;
    t.zero_reductions += it.zero_reductions;
    t.unsafe_reductions += it.unsafe_reductions;
    t.rewritten += it.rewritten;
    t.store_size = it.store_size;
  }
  return t;
}

}  // namespace f5c
