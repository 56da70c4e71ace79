// Buchberger's algorithm with the Gebauer–Möller update, used as an
// independent oracle for the signature-based variants.

#include <algorithm>
#include <tuple>

#include "f5c/drivers.hpp"

namespace f5c {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, StepCounter* counter) : ring_(ring), counter_(counter) {}

  std::vector<Polynomial> run(std::span<const Polynomial> F) {
    for (const Polynomial& f : F) {
      if (f.is_zero()) continue;
      if (add(make_monic(normal_form(f, active_polys_, ring_, counter_), ring_))) return unit();
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        auto c = ring_.order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      Polynomial s = spoly(basis_[p.i], basis_[p.j], ring_);
      Polynomial h = normal_form(s, active_polys_, ring_, counter_);
      if (h.is_zero()) continue;
      if (add(make_monic(h, ring_))) return unit();
    }
    return interreduce(active_polys_, ring_, counter_);
  }

 private:
  std::vector<Polynomial> unit() const { return {Polynomial::constant(1, ring_)}; }

  /// Returns true when h is a unit.
  bool add(Polynomial h) {
    if (h.is_zero()) return false;
    if (h.is_constant()) return true;
    basis_.push_back(std::move(h));
    active_.push_back(false);
    update(basis_.size() - 1);
    return false;
  }

  void update(std::size_t h) {
    const Monomial& th = basis_[h].head_monomial();
    std::vector<Pair> C;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) C.push_back(Pair{g, h, mono_lcm(basis_[g].head_monomial(), th)});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = coprime(th, basis_[C[a].i].head_monomial());
      if (!keep) {
        auto divides_lcm = [&](const Pair& q) { return q.lcm.divides(C[a].lcm); };
        keep = std::none_of(C.begin() + static_cast<std::ptrdiff_t>(a) + 1, C.end(), divides_lcm) &&
               std::none_of(D.begin(), D.end(), divides_lcm);
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> next;
    for (Pair& p : pairs_) {
      const Monomial& ti = basis_[p.i].head_monomial();
      const Monomial& tj = basis_[p.j].head_monomial();
      if (!th.divides(p.lcm) || mono_lcm(ti, th) == p.lcm || mono_lcm(tj, th) == p.lcm) {
        next.push_back(std::move(p));
      }
    }
    for (Pair& p : D) {
      if (!coprime(th, basis_[p.i].head_monomial())) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && th.divides(basis_[g].head_monomial())) active_[g] = false;
    }
    active_[h] = true;
    active_polys_.clear();
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (active_[g]) active_polys_.push_back(basis_[g]);
    }
  }

  const Ring& ring_;
  StepCounter* counter_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Polynomial> active_polys_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> buchberger_reduced(std::span<const Polynomial> F, const Ring& ring,
                                           StepCounter* counter) {
  if (F.empty()) throw InvalidInput("empty generator list");
  return Buchberger(ring, counter).run(F);
}

std::vector<Polynomial> buchberger_unpruned(std::span<const Polynomial> F, const Ring& ring) {
  if (F.empty()) throw InvalidInput("empty generator list");
  std::vector<Polynomial> G;
  for (const Polynomial& f : F) {
    if (!f.is_zero()) G.push_back(make_monic(f, ring));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Polynomial h = normal_form(spoly(G[i], G[j], ring), G, ring);
    if (h.is_zero()) continue;
    G.push_back(make_monic(h, ring));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  return interreduce(std::move(G), ring);
}

bool groebner_check(std::span<const Polynomial> G, const Ring& ring) {
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : G) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  DivisorIndex heads(nonzero);
  for (std::size_t j = 0; j < nonzero.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Polynomial s = spoly(nonzero[i], nonzero[j], ring);
      while (!s.is_zero()) {
        std::size_t r = heads.find(s.head_monomial());
        if (r == DivisorIndex::npos) return false;
        s = top_reduce_step(s, nonzero[r], ring);
      }
    }
  }
  return true;
}

bool is_interreduced(std::span<const Polynomial> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || G[i].head_coeff() != 1) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      const Monomial& head = G[j].head_monomial();
      for (const Term& t : G[i].terms()) {
        if (head.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace f5c
