#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "f5c/polynomial.hpp"

namespace f5c {

/// Module signature mu*e_nu, or the distinguished zero signature which
/// compares below every other one.
class Signature {
 public:
  Signature(Monomial mu, std::size_t index);
  static Signature zero() { return Signature(); }

  bool is_zero() const noexcept { return zero_; }
  /// Both accessors throw Error on the zero signature.
  const Monomial& monomial() const;
  std::size_t index() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature() = default;
  bool zero_ = true;
  Monomial mu_;
  std::size_t index_ = 0;
};

/// Index first, then monomial under `order`.
std::strong_ordering sig_cmp(const Signature& a, const Signature& b, const MonomialOrder& order);
/// (u*mu) e_nu; throws Error on the zero signature.
Signature sig_mul(const Monomial& u, const Signature& s);

/// Cofactor vector h with poly = sum_l h[l] * F'[l]; missing trailing
/// entries are zero.
using Cofactors = std::vector<Polynomial>;

struct LabeledPolynomial {
  Signature sig;
  Polynomial poly;
  std::optional<Cofactors> cofactors;
};

/// True iff the cofactors represent lp.poly over `system`, vanish above the
/// signature index and have head lt(h_nu) = mu. Throws Error when lp carries
/// no cofactors or has the zero signature.
bool admissible_check(const LabeledPolynomial& lp, std::span<const Polynomial> system,
                      const Ring& ring);

/// e_index as a cofactor vector of the given length.
Cofactors unit_cofactors(std::size_t index, std::size_t length, const Ring& ring);

}  // namespace f5c
