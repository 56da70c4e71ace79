#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "f5c/polynomial.hpp"
#include "f5c/stats.hpp"
#include "f5c/store.hpp"

namespace f5c {

/// (t, k, u, l, v): u*lt(poly k) = v*lt(poly l) = t, and u*sig(k) is the
/// larger signature unless the two are equal.
struct CriticalPair {
  Monomial lcm;
  std::size_t k;
  Monomial u;
  std::size_t l;
  Monomial v;

  unsigned degree() const noexcept { return lcm.degree(); }
  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

/// Inputs of one incremental step: the new generator's signature index, the
/// store indices of the previous basis and the polynomials used to reduce
/// by it (identical to the indexed ones in F5, interreduced in F5R/F5C).
struct IterationState {
  std::size_t index = 0;
  std::vector<std::size_t> prev;
  std::vector<Polynomial> bprev;
  DivisorIndex bprev_heads;
  /// Certified mode: cofactors of bprev and the system F' they refer to.
  std::vector<Cofactors> bprev_cofactors;
  std::vector<Polynomial> system;

  IterationState() = default;
  IterationState(std::size_t i, std::vector<std::size_t> prev_indices,
                 std::vector<Polynomial> prev_basis)
      : index(i), prev(std::move(prev_indices)), bprev(std::move(prev_basis)),
        bprev_heads(bprev) {}
};

struct TopReductionResult {
  std::vector<std::size_t> completed;
  std::vector<std::size_t> redo;
};

struct EngineOptions {
  bool certified = false;
  std::size_t store_cap = PolyStore::kDefaultCap;
  std::ostream* trace = nullptr;
};

/// Owns the labeled-polynomial store and rewrite rules of one computation
/// and implements the signature-based incremental step.
class Engine {
 public:
  Engine(Ring ring, EngineOptions options = {});

  const Ring& ring() const noexcept { return ring_; }
  const EngineOptions& options() const noexcept { return options_; }
  PolyStore& store() noexcept { return store_; }
  const PolyStore& store() const noexcept { return store_; }
  RuleList& rules() noexcept { return rules_; }
  const RuleList& rules() const noexcept { return rules_; }
  StepCounter& counter() noexcept { return counter_; }
  StepCounter& interreduction_counter() noexcept { return interreduction_counter_; }
  RunStats& stats() noexcept { return stats_; }
  const RunStats& stats() const noexcept { return stats_; }

  void begin_iteration(std::size_t i);
  void end_iteration(std::size_t basis_size);
  IterationStats& current() noexcept { return current_; }

  /// Rejects the pair when a component whose signature index equals
  /// state.index has u*mu top-reducible by the previous basis.
  std::optional<CriticalPair> critical_pair(std::size_t k, std::size_t l,
                                            const IterationState& state) const;

  /// Forms the S-polynomials of pairs sharing one degree. Returns indices of
  /// the nonzero ones, sorted by increasing signature.
  std::vector<std::size_t> compute_spols(std::vector<CriticalPair> pairs);

  std::vector<std::size_t> reduction(std::vector<std::size_t> todo, const IterationState& state,
                                     const std::vector<std::size_t>& curr);

  TopReductionResult top_reduction(std::size_t k, const IterationState& state,
                                   const std::vector<std::size_t>& curr_plus_done);

  std::optional<std::size_t> find_reductor(std::size_t k, const IterationState& state,
                                           const std::vector<std::size_t>& curr);

  /// Gröbner basis of the ideal including the generator stored last.
  std::vector<std::size_t> incremental_basis(const IterationState& state);

  /// is_rewritable that also audits the rewriter-index invariant.
  bool rewritable(const Monomial& u, std::size_t k);

  /// Certified mode: checks store entry k against state.system.
  void certify(std::size_t k, std::span<const Polynomial> system);

 private:
  void trace_line(const std::string& line) const;
  void insert_by_signature(std::vector<std::size_t>& todo, std::size_t k) const;

  Ring ring_;
  EngineOptions options_;
  PolyStore store_;
  RuleList rules_;
  StepCounter counter_;
  StepCounter interreduction_counter_;
  RunStats stats_;
  IterationStats current_;
  std::uint64_t steps_at_begin_ = 0;
  std::uint64_t interreduction_steps_at_begin_ = 0;
};

}  // namespace f5c
