#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "f5c/signature.hpp"

namespace f5c {

/// Append-only list of labeled polynomials, 1-indexed. Index 0 names the
/// phantom polynomial and has no entry. Signatures are fixed at append time;
/// only the polynomial part (and its cofactors) may be replaced.
class PolyStore {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit PolyStore(std::size_t cap = kDefaultCap) : cap_(cap) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t cap() const noexcept { return cap_; }

  /// Returns the index of the new entry. Throws StoreCapExceeded.
  std::size_t append(Signature sig, Polynomial poly, std::optional<Cofactors> cofactors = {});
  void replace_poly(std::size_t k, Polynomial poly, std::optional<Cofactors> cofactors = {});
  void clear() { entries_.clear(); }

  /// Throws std::out_of_range for 0 or indices past the end.
  const LabeledPolynomial& at(std::size_t k) const;
  const Signature& sig(std::size_t k) const { return at(k).sig; }
  const Polynomial& poly(std::size_t k) const { return at(k).poly; }

 private:
  std::vector<LabeledPolynomial> entries_;
  std::size_t cap_;
};

struct Rule {
  Monomial mono;
  std::size_t index;  // 0 = phantom
};

/// Per-index chronological lists of rewrite rules (Rules_1, Rules_2, ...).
class RuleList {
 public:
  std::size_t count() const noexcept { return lists_.size(); }
  /// Drops everything and creates `count` empty lists.
  void reset(std::size_t count);
  /// Appends empty lists until Rules_nu exists.
  void ensure(std::size_t nu);

  /// Appends (mu, k) to Rules_nu. Throws Error on the zero signature.
  void add_rule(const Signature& s, std::size_t k);
  std::span<const Rule> rules(std::size_t nu) const;
  std::size_t total() const noexcept;

  /// Latest rule of Rules_nu(k) whose monomial divides u*mu_k; k if none.
  std::size_t find_rewriting(const Monomial& u, std::size_t k, const PolyStore& store) const;
  bool is_rewritable(const Monomial& u, std::size_t k, const PolyStore& store) const {
    return find_rewriting(u, k, store) != k;
  }

  /// Number of add_rule calls that broke the strictly-increasing order of
  /// nonzero store indices within one list.
  std::size_t monotonicity_violations() const noexcept { return monotonicity_violations_; }

 private:
  std::vector<std::vector<Rule>> lists_;
  std::size_t monotonicity_violations_ = 0;
};

}  // namespace f5c
