#include "f5c/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace f5c {

Ring::Ring(PrimeField f, MonomialOrder o, std::vector<std::string> vars)
    : field(f), order(o), variables(std::move(vars)) {
  if (variables.size() > kMaxVariables) {
    throw Error("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

Monomial Ring::var(std::size_t i, unsigned exponent) const {
  Monomial m(arity());
  m.set(i, exponent);
  return m;
}

// ---- Polynomial ------------------------------------------------------------

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& ring) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.order.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    t.coeff %= ring.field.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring.field.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  return Polynomial(std::move(terms));
}

Polynomial Polynomial::constant(Coeff c, const Ring& ring) {
  c %= ring.field.characteristic();
  if (c == 0) return {};
  return Polynomial({Term{c, ring.one()}});
}

Polynomial Polynomial::term(Coeff c, Monomial m) {
  if (c == 0) return {};
  return Polynomial({Term{c, std::move(m)}});
}

const Monomial& Polynomial::head_monomial() const {
  if (terms_.empty()) throw ZeroPolynomial("head monomial");
  return terms_.front().mono;
}

Coeff Polynomial::head_coeff() const {
  if (terms_.empty()) throw ZeroPolynomial("head coefficient");
  return terms_.front().coeff;
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

// ---- arithmetic ------------------------------------------------------------

namespace detail {

std::vector<Term> sub_mul_tail(std::span<const Term> a, Coeff c, const Monomial& m,
                               std::span<const Term> b, const Ring& ring) {
  const PrimeField& F = ring.field;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  if (j < b.size()) {
    Monomial bm = b[j].mono * m;
    while (i < a.size()) {
      auto cmp = ring.order.compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
        continue;
      }
      Coeff bc = F.neg(F.mul(c, b[j].coeff));
      if (cmp == 0) {
        Coeff s = F.add(a[i].coeff, bc);
        if (s != 0) out.push_back(Term{s, a[i].mono});
        ++i;
      } else {
        out.push_back(Term{bc, bm});
      }
      if (++j == b.size()) break;
      bm = b[j].mono * m;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{F.neg(F.mul(c, b[j].coeff)), b[j].mono * m});
  return out;
}

}  // namespace detail

Polynomial sub_mul(const Polynomial& p, Coeff c, const Monomial& m, const Polynomial& q,
                   const Ring& ring) {
  if (c == 0 || q.is_zero()) return p;
  return Polynomial::from_sorted_terms(detail::sub_mul_tail(p.terms(), c, m, q.terms(), ring));
}

Polynomial add(const Polynomial& p, const Polynomial& q, const Ring& ring) {
  return sub_mul(p, ring.field.neg(1), ring.one(), q, ring);
}

Polynomial sub(const Polynomial& p, const Polynomial& q, const Ring& ring) {
  return sub_mul(p, 1, ring.one(), q, ring);
}

Polynomial scale(const Polynomial& p, Coeff c, const Ring& ring) {
  return mul_term(p, c, ring.one(), ring);
}

Polynomial mul_term(const Polynomial& p, Coeff c, const Monomial& m, const Ring& ring) {
  c %= ring.field.characteristic();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) out.push_back(Term{ring.field.mul(c, t.coeff), t.mono * m});
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q, const Ring& ring) {
  Polynomial r;
  for (const Term& t : q.terms()) r = sub_mul(r, ring.field.neg(t.coeff), t.mono, p, ring);
  return r;
}

Polynomial make_monic(const Polynomial& p, const Ring& ring) {
  if (p.is_zero() || p.head_coeff() == 1) return p;
  return scale(p, ring.field.inv(p.head_coeff()), ring);
}

// ---- reduction -------------------------------------------------------------

DivisorIndex::DivisorIndex(std::span<const Polynomial> reducers) {
  heads_.reserve(reducers.size());
  masks_.reserve(reducers.size());
  for (const Polynomial& g : reducers) push_back(g.head_monomial());
}

std::uint64_t DivisorIndex::divmask(const Monomial& m) noexcept {
  const std::size_t n = m.arity();
  if (n == 0) return 0;
  const std::size_t bits = std::min<std::size_t>(64 / n, 8);
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t e = std::min<std::size_t>(m[v], bits);
    mask |= ((std::uint64_t{1} << e) - 1) << (v * bits);
  }
  return mask;
}

std::size_t DivisorIndex::find(const Monomial& m, std::size_t skip) const {
  const std::uint64_t mm = divmask(m);
  for (std::size_t i = 0; i < heads_.size(); ++i) {
    if ((masks_[i] & ~mm) == 0 && i != skip && heads_[i].divides(m)) return i;
  }
  return npos;
}

Polynomial spoly(const Polynomial& p, const Polynomial& q, const Ring& ring) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("S-polynomial operand");
  const Monomial t = mono_lcm(p.head_monomial(), q.head_monomial());
  Polynomial a = mul_term(p, q.head_coeff(), mono_div(t, p.head_monomial()), ring);
  return sub_mul(a, p.head_coeff(), mono_div(t, q.head_monomial()), q, ring);
}

Polynomial top_reduce_step(const Polynomial& p, const Polynomial& g, const Ring& ring,
                           StepCounter* counter) {
  if (p.is_zero() || g.is_zero()) throw ZeroPolynomial("top-reduction operand");
  Monomial m = mono_div(p.head_monomial(), g.head_monomial());
  Coeff c = ring.field.div(p.head_coeff(), g.head_coeff());
  if (counter) ++counter->steps;
  return Polynomial::from_sorted_terms(
      detail::sub_mul_tail(p.terms().subspan(1), c, m, g.terms().subspan(1), ring));
}

bool is_top_reducible(const Monomial& m, std::span<const Polynomial> G) {
  return std::any_of(G.begin(), G.end(),
                     [&](const Polynomial& g) { return g.head_monomial().divides(m); });
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, const Ring& ring,
                       StepCounter* counter) {
  DivisorIndex heads(G);
  return normal_form_observed(p, G, heads, ring, counter,
                              [](std::size_t, Coeff, const Monomial&) {});
}

namespace {

bool terms_less(const Polynomial& a, const Polynomial& b, const Ring& ring) {
  auto ta = a.terms(), tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    auto cmp = ring.order.compare(ta[i].mono, tb[i].mono);
    if (cmp != 0) return cmp < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

void scale_all(std::vector<Polynomial>& v, Coeff c, const Ring& ring) {
  for (Polynomial& x : v) x = scale(x, c, ring);
}

}  // namespace

TrackedBasis interreduce_tracked(std::vector<Polynomial> G,
                                 std::vector<std::vector<Polynomial>> companions,
                                 const Ring& ring, StepCounter* counter) {
  companions.resize(G.size());
  std::vector<Polynomial> polys;
  std::vector<std::vector<Polynomial>> comps;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    Coeff inv = ring.field.inv(G[i].head_coeff());
    polys.push_back(scale(G[i], inv, ring));
    scale_all(companions[i], inv, ring);
    comps.push_back(std::move(companions[i]));
  }
  {
    std::vector<std::size_t> perm(polys.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return ring.order.less(polys[a].head_monomial(), polys[b].head_monomial());
    });
    std::vector<Polynomial> p2;
    std::vector<std::vector<Polynomial>> c2;
    for (std::size_t i : perm) {
      p2.push_back(std::move(polys[i]));
      c2.push_back(std::move(comps[i]));
    }
    polys = std::move(p2);
    comps = std::move(c2);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    DivisorIndex heads(polys);
    std::size_t i = 0;
    while (i < polys.size()) {
      auto& own = comps[i];
      Polynomial r = normal_form_observed(
          polys[i], polys, heads, ring, counter,
          [&](std::size_t idx, Coeff c, const Monomial& m) {
            const auto& other = comps[idx];
            if (own.size() < other.size()) own.resize(other.size());
            for (std::size_t l = 0; l < other.size(); ++l) {
              own[l] = sub_mul(own[l], c, m, other[l], ring);
            }
          },
          i);
      if (r == polys[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        Coeff inv = ring.field.inv(r.head_coeff());
        polys[i] = scale(r, inv, ring);
        scale_all(own, inv, ring);
        ++i;
      }
      heads = DivisorIndex(polys);
    }
  }

  std::vector<std::size_t> perm(polys.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return terms_less(polys[a], polys[b], ring);
  });
  TrackedBasis out;
  for (std::size_t i : perm) {
    out.basis.push_back(std::move(polys[i]));
    out.companions.push_back(std::move(comps[i]));
  }
  return out;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const Ring& ring,
                                    StepCounter* counter) {
  return interreduce_tracked(std::move(G), {}, ring, counter).basis;
}

void canonical_sort(std::vector<Polynomial>& G, const Ring& ring) {
  std::sort(G.begin(), G.end(),
            [&](const Polynomial& a, const Polynomial& b) { return terms_less(a, b, ring); });
}

}  // namespace f5c
