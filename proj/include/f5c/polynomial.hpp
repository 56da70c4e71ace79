#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "f5c/field.hpp"
#include "f5c/monomial.hpp"

namespace f5c {

/// Coefficient field, monomial order and variable names of a polynomial ring.
struct Ring {
  PrimeField field;
  MonomialOrder order;
  std::vector<std::string> variables;

  Ring(PrimeField f, MonomialOrder o, std::vector<std::string> vars);

  std::size_t arity() const noexcept { return variables.size(); }
  Monomial one() const { return Monomial(arity()); }
  Monomial var(std::size_t i, unsigned exponent = 1) const;
};

struct Term {
  Coeff coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending under the
/// ring's order. The empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts, merges like monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms, const Ring& ring);
  /// Caller guarantees the canonical-form invariant.
  static Polynomial from_sorted_terms(std::vector<Term> terms);
  static Polynomial constant(Coeff c, const Ring& ring);
  static Polynomial term(Coeff c, Monomial m);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// lt(p); throws ZeroPolynomial on 0.
  const Monomial& head_monomial() const;
  /// lc(p); throws ZeroPolynomial on 0.
  Coeff head_coeff() const;

  bool is_constant() const noexcept { return terms_.size() == 1 && terms_.front().mono.is_one(); }
  bool is_one() const noexcept { return is_constant() && terms_.front().coeff == 1; }
  bool is_homogeneous() const noexcept;
  /// Total degree of the head term (0 for the zero polynomial).
  unsigned degree() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

// ---- arithmetic ----------------------------------------------------------

Polynomial add(const Polynomial& p, const Polynomial& q, const Ring& ring);
Polynomial sub(const Polynomial& p, const Polynomial& q, const Ring& ring);
Polynomial scale(const Polynomial& p, Coeff c, const Ring& ring);
/// c * m * p
Polynomial mul_term(const Polynomial& p, Coeff c, const Monomial& m, const Ring& ring);
Polynomial mul(const Polynomial& p, const Polynomial& q, const Ring& ring);
/// p - c * m * q
Polynomial sub_mul(const Polynomial& p, Coeff c, const Monomial& m, const Polynomial& q,
                   const Ring& ring);
/// Divides by the head coefficient; 0 stays 0.
Polynomial make_monic(const Polynomial& p, const Ring& ring);

// ---- reduction -----------------------------------------------------------

/// Counts elementary reduction steps: one per cancellation of a single
/// monomial against a multiple of a reducer.
struct StepCounter {
  std::uint64_t steps = 0;
};

/// Head monomials of a reducer list, kept contiguous for fast divisor scans.
class DivisorIndex {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  DivisorIndex() = default;
  explicit DivisorIndex(std::span<const Polynomial> reducers);

  void push_back(const Monomial& head) {
    heads_.push_back(head);
    masks_.push_back(divmask(head));
  }
  std::size_t size() const noexcept { return heads_.size(); }
  /// First reducer (in list order) whose head divides m, skipping `skip`.
  std::size_t find(const Monomial& m, std::size_t skip = npos) const;

  /// Bit (v, k) is set iff the exponent of variable v is at least k + 1.
  /// If a divides b then divmask(a) is a subset of divmask(b).
  static std::uint64_t divmask(const Monomial& m) noexcept;

 private:
  std::vector<Monomial> heads_;
  std::vector<std::uint64_t> masks_;
};

/// S = lc(q)*sigma(p,q)*p - lc(p)*sigma(q,p)*q with sigma(p,q) = lcm/lt(p).
Polynomial spoly(const Polynomial& p, const Polynomial& q, const Ring& ring);

/// p - (lc(p)/lc(g)) * (lt(p)/lt(g)) * g. Throws NotDivisible when lt(g)
/// does not divide lt(p), ZeroPolynomial on a zero operand.
Polynomial top_reduce_step(const Polynomial& p, const Polynomial& g, const Ring& ring,
                           StepCounter* counter = nullptr);

bool is_top_reducible(const Monomial& m, std::span<const Polynomial> G);

namespace detail {
struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};
std::vector<Term> sub_mul_tail(std::span<const Term> a, Coeff c, const Monomial& m,
                               std::span<const Term> b, const Ring& ring);
}  // namespace detail

/// Full reduction of every monomial of p by G. `on_step(index, c, m)` is
/// invoked for every step p <- p - c*m*G[index]. Reducers are chosen as the
/// first element of G (skipping `skip`) whose head divides the monomial.
template <class OnStep>
Polynomial normal_form_observed(const Polynomial& p, std::span<const Polynomial> G,
                                const DivisorIndex& heads, const Ring& ring,
                                StepCounter* counter, OnStep&& on_step,
                                std::size_t skip = DivisorIndex::npos) {
  if (p.is_zero() || G.empty()) return p;
  // Pending terms live in a hash map; a max-heap yields the largest one.
  // A monomial may sit in the heap several times; stale copies are skipped.
  std::unordered_map<Monomial, Coeff, detail::MonomialHash> pending;
  std::vector<Monomial> heap;
  pending.reserve(4 * p.size());
  heap.reserve(4 * p.size());
  auto heap_less = [&](const Monomial& a, const Monomial& b) { return ring.order.less(a, b); };
  for (const Term& t : p.terms()) {
    pending.emplace(t.mono, t.coeff);
    heap.push_back(t.mono);
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);
  std::vector<Term> out;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    Monomial mono = std::move(heap.back());
    heap.pop_back();
    auto it = pending.find(mono);
    if (it == pending.end()) continue;
    const Coeff coeff = it->second;
    pending.erase(it);
    if (coeff == 0) continue;
    std::size_t idx = heads.find(mono, skip);
    if (idx == DivisorIndex::npos) {
      out.push_back(Term{coeff, std::move(mono)});
      continue;
    }
    const Polynomial& g = G[idx];
    Coeff c = ring.field.div(coeff, g.head_coeff());
    Monomial m = mono_div(mono, g.head_monomial());
    on_step(idx, c, m);
    if (counter) ++counter->steps;
    for (const Term& t : g.terms().subspan(1)) {
      Monomial mm = m * t.mono;
      auto [slot, inserted] = pending.try_emplace(mm, 0);
      slot->second = ring.field.sub(slot->second, ring.field.mul(c, t.coeff));
      if (inserted) {
        heap.push_back(std::move(mm));
        std::push_heap(heap.begin(), heap.end(), heap_less);
      }
    }
  }
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, const Ring& ring,
                       StepCounter* counter = nullptr);

/// Result of an interreduction that carries, for every output polynomial,
/// a companion vector transformed by the same linear operations.
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> companions;
};

/// Interreduces G: drops zeros, reduces every element fully by the others
/// until nothing changes, makes everything monic and sorts ascending by head
/// monomial. For a Groebner basis input the output is the reduced basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const Ring& ring,
                                    StepCounter* counter = nullptr);

/// Same as interreduce; companions[i] is a vector of polynomials attached to
/// G[i] (e.g. cofactors) and undergoes every operation applied to G[i].
TrackedBasis interreduce_tracked(std::vector<Polynomial> G,
                                 std::vector<std::vector<Polynomial>> companions,
                                 const Ring& ring, StepCounter* counter = nullptr);

/// Ascending by head monomial, then lexicographically by the remaining terms.
void canonical_sort(std::vector<Polynomial>& G, const Ring& ring);

}  // namespace f5c
