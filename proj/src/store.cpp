#include "f5c/store.hpp"

#include <stdexcept>
#include <string>

namespace f5c {

std::size_t PolyStore::append(Signature sig, Polynomial poly, std::optional<Cofactors> cofactors) {
  if (entries_.size() >= cap_) throw StoreCapExceeded(cap_);
  entries_.push_back(LabeledPolynomial{std::move(sig), std::move(poly), std::move(cofactors)});
  return entries_.size();
}

void PolyStore::replace_poly(std::size_t k, Polynomial poly, std::optional<Cofactors> cofactors) {
  at(k);
  LabeledPolynomial& e = entries_[k - 1];
  e.poly = std::move(poly);
  e.cofactors = std::move(cofactors);
}

const LabeledPolynomial& PolyStore::at(std::size_t k) const {
  if (k == 0 || k > entries_.size()) {
    throw std::out_of_range("store index " + std::to_string(k) + " out of range");
  }
  return entries_[k - 1];
}

void RuleList::reset(std::size_t count) {
  lists_.assign(count, {});
}

void RuleList::ensure(std::size_t nu) {
  if (lists_.size() < nu) lists_.resize(nu);
}

void RuleList::add_rule(const Signature& s, std::size_t k) {
  const std::size_t nu = s.index();
  ensure(nu);
  auto& list = lists_[nu - 1];
  if (k != 0) {
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
      if (it->index == 0) continue;
      if (it->index >= k) ++monotonicity_violations_;
      break;
    }
  }
  list.push_back(Rule{s.monomial(), k});
}

std::span<const Rule> RuleList::rules(std::size_t nu) const {
  if (nu == 0 || nu > lists_.size()) return {};
  return lists_[nu - 1];
}

std::size_t RuleList::total() const noexcept {
  std::size_t n = 0;
  for (const auto& l : lists_) n += l.size();
  return n;
}

std::size_t RuleList::find_rewriting(const Monomial& u, std::size_t k, const PolyStore& store) const {
  const Signature& s = store.sig(k);
  const auto list = rules(s.index());
  if (list.empty()) return k;
  const Monomial target = u * s.monomial();
  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    if (it->mono.divides(target)) return it->index;
  }
  return k;
}

}  // namespace f5c
