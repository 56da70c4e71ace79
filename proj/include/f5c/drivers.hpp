#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "f5c/engine.hpp"
#include "f5c/polynomial.hpp"
#include "f5c/stats.hpp"

namespace f5c {

enum class Variant { f5, f5r, f5c };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct VariantConfig {
  Variant variant = Variant::f5;
  /// F5C only: leave the rewrite rules empty after rebuilding the store.
  bool skip_rule_rebuild = false;
  /// Track cofactors and audit admissibility at every store mutation.
  bool certified = false;
  std::size_t store_cap = PolyStore::kDefaultCap;
  /// Progress lines in the format of the reference prototype.
  std::ostream* trace = nullptr;

  /// Throws InvalidInput when skip_rule_rebuild is set for F5/F5R.
  void validate() const;
};

struct BasisResult {
  std::vector<Polynomial> basis;
  RunStats stats;
  /// True when `basis` is the reduced Gröbner basis.
  bool reduced = false;
};

/// Sorts by increasing total degree, then increasing head monomial, then
/// input position; makes every generator monic. Throws InvalidInput on an
/// empty list, a zero generator or a non-homogeneous generator.
std::vector<Polynomial> prepare_generators(std::span<const Polynomial> F, const Ring& ring);

/// Dispatches on config.variant.
BasisResult compute_basis(std::span<const Polynomial> F, const Ring& ring,
                          const VariantConfig& config);

BasisResult f5(std::span<const Polynomial> F, const Ring& ring, VariantConfig config = {});
BasisResult f5r(std::span<const Polynomial> F, const Ring& ring, VariantConfig config = {});
BasisResult f5c(std::span<const Polynomial> F, const Ring& ring, VariantConfig config = {});

/// Replaces the engine's store by (e_j, B_j) for the interreduction B of
/// the polynomials indexed by `curr`, and (unless skip_rules) records the
/// phantom rules (lcm(B_j,B_k)/lt(B_k) e_k, 0) for j < k. Returns {1..#B}.
std::vector<std::size_t> setup_reduced_basis(Engine& engine, const std::vector<std::size_t>& curr,
                                             bool skip_rules);

/// Reduced Gröbner basis by Buchberger's algorithm with Gebauer–Möller pair
/// pruning. Shares nothing with the signature engine beyond polynomial
/// arithmetic. Homogeneity is not required.
std::vector<Polynomial> buchberger_reduced(std::span<const Polynomial> F, const Ring& ring,
                                           StepCounter* counter = nullptr);

/// Same without any pair criteria; only meant for cross-checking the pruned
/// version on small inputs.
std::vector<Polynomial> buchberger_unpruned(std::span<const Polynomial> F, const Ring& ring);

/// True iff every pairwise S-polynomial of G top-reduces to zero over G.
bool groebner_check(std::span<const Polynomial> G, const Ring& ring);

/// True iff G is monic, nonzero, and no monomial of any element is divisible
/// by the head monomial of another.
bool is_interreduced(std::span<const Polynomial> G);

/// Adds a fresh lowest-precedence variable and homogenizes every generator.
/// Returns the extended ring; `F` is rewritten in place.
Ring homogenize(std::vector<Polynomial>& F, const Ring& ring, std::string_view name = "h");

}  // namespace f5c
