#include "f5c/signature.hpp"

namespace f5c {

Signature::Signature(Monomial mu, std::size_t index)
    : zero_(false), mu_(std::move(mu)), index_(index) {
  if (index == 0) throw Error("signature index must be >= 1");
}

const Monomial& Signature::monomial() const {
  if (zero_) throw Error("zero signature has no monomial");
  return mu_;
}

std::size_t Signature::index() const {
  if (zero_) throw Error("zero signature has no index");
  return index_;
}

std::strong_ordering sig_cmp(const Signature& a, const Signature& b, const MonomialOrder& order) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  if (a.index() != b.index()) return a.index() <=> b.index();
  return order.compare(a.monomial(), b.monomial());
}

Signature sig_mul(const Monomial& u, const Signature& s) {
  if (s.is_zero()) throw Error("cannot multiply the zero signature");
  return Signature(u * s.monomial(), s.index());
}

bool admissible_check(const LabeledPolynomial& lp, std::span<const Polynomial> system,
                      const Ring& ring) {
  if (!lp.cofactors) throw Error("admissibility check requires cofactors");
  const Cofactors& h = *lp.cofactors;
  const std::size_t nu = lp.sig.index();
  for (std::size_t l = nu; l < h.size(); ++l) {
    if (!h[l].is_zero()) return false;
  }
  if (h.size() < nu || h[nu - 1].is_zero()) return false;
  if (!(h[nu - 1].head_monomial() == lp.sig.monomial())) return false;
  if (nu > system.size()) return false;
  Polynomial sum;
  for (std::size_t l = 0; l < nu; ++l) sum = add(sum, mul(h[l], system[l], ring), ring);
  return sum == lp.poly;
}

Cofactors unit_cofactors(std::size_t index, std::size_t length, const Ring& ring) {
  Cofactors h(length);
  h.at(index - 1) = Polynomial::constant(1, ring);
  return h;
}

}  // namespace f5c
