#include "f5c/engine.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace f5c {

namespace {

/// h - c*m*g, componentwise.
Cofactors cofactors_sub_mul(Cofactors h, Coeff c, const Monomial& m, const Cofactors& g,
                            const Ring& ring) {
  if (h.size() < g.size()) h.resize(g.size());
  for (std::size_t l = 0; l < g.size(); ++l) h[l] = sub_mul(h[l], c, m, g[l], ring);
  return h;
}

Cofactors cofactors_scale(Cofactors h, Coeff c, const Monomial& m, const Ring& ring) {
  for (Polynomial& x : h) x = mul_term(x, c, m, ring);
  return h;
}

}  // namespace

Engine::Engine(Ring ring, EngineOptions options)
    : ring_(std::move(ring)), options_(options), store_(options.store_cap) {}

void Engine::trace_line(const std::string& line) const {
  if (options_.trace) *options_.trace << line << '\n';
}

void Engine::begin_iteration(std::size_t i) {
  current_ = IterationStats{};
  current_.i = i;
  steps_at_begin_ = counter_.steps;
  interreduction_steps_at_begin_ = interreduction_counter_.steps;
  stats_.degree_sequences.emplace_back();
}

void Engine::end_iteration(std::size_t basis_size) {
  current_.basis_size = basis_size;
  current_.reduction_steps = counter_.steps - steps_at_begin_;
  current_.interreduction_steps = interreduction_counter_.steps - interreduction_steps_at_begin_;
  current_.store_size = store_.size();
  stats_.iterations.push_back(current_);
  stats_.certification.rule_order_violations = rules_.monotonicity_violations();
}

bool Engine::rewritable(const Monomial& u, std::size_t k) {
  const std::size_t j = rules_.find_rewriting(u, k, store_);
  if (j == k) return false;
  if (j != 0 && j < k) ++stats_.certification.rewriter_order_violations;
  ++current_.rewritten;
  return true;
}

void Engine::certify(std::size_t k, std::span<const Polynomial> system) {
  if (!options_.certified) return;
  ++stats_.certification.admissibility_checks;
  if (!admissible_check(store_.at(k), system, ring_)) {
    ++stats_.certification.admissibility_violations;
  }
}

std::optional<CriticalPair> Engine::critical_pair(std::size_t k, std::size_t l,
                                                  const IterationState& state) const {
  const Monomial& tk = store_.poly(k).head_monomial();
  const Monomial& tl = store_.poly(l).head_monomial();
  Monomial t = mono_lcm(tk, tl);
  Monomial u1 = mono_div(t, tk);
  Monomial u2 = mono_div(t, tl);
  const Signature& s1 = store_.sig(k);
  const Signature& s2 = store_.sig(l);
  if (s1.index() == state.index &&
      state.bprev_heads.find(u1 * s1.monomial()) != DivisorIndex::npos) {
    return std::nullopt;
  }
  if (s2.index() == state.index &&
      state.bprev_heads.find(u2 * s2.monomial()) != DivisorIndex::npos) {
    return std::nullopt;
  }
  if (sig_cmp(sig_mul(u1, s1), sig_mul(u2, s2), ring_.order) < 0) {
    return CriticalPair{std::move(t), l, std::move(u2), k, std::move(u1)};
  }
  return CriticalPair{std::move(t), k, std::move(u1), l, std::move(u2)};
}

void Engine::insert_by_signature(std::vector<std::size_t>& todo, std::size_t k) const {
  auto pos = std::upper_bound(todo.begin(), todo.end(), k, [&](std::size_t a, std::size_t b) {
    return sig_cmp(store_.sig(a), store_.sig(b), ring_.order) < 0;
  });
  todo.insert(pos, k);
}

std::vector<std::size_t> Engine::compute_spols(std::vector<CriticalPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
    auto c = ring_.order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  });
  std::vector<std::size_t> newpols;
  for (const CriticalPair& pair : pairs) {
    if (rewritable(pair.u, pair.k) || rewritable(pair.v, pair.l)) continue;
    const LabeledPolynomial& pk = store_.at(pair.k);
    const LabeledPolynomial& pl = store_.at(pair.l);
    Polynomial s = spoly(pk.poly, pl.poly, ring_);
    std::optional<Cofactors> h;
    if (options_.certified && pk.cofactors && pl.cofactors) {
      h = cofactors_sub_mul(cofactors_scale(*pk.cofactors, pl.poly.head_coeff(), pair.u, ring_),
                            pk.poly.head_coeff(), pair.v, *pl.cofactors, ring_);
    }
    Signature sig = sig_mul(pair.u, pk.sig);
    const bool nonzero = !s.is_zero();
    const std::size_t idx = store_.append(sig, std::move(s), std::move(h));
    rules_.add_rule(sig, idx);
    ++current_.spolys;
    if (nonzero) newpols.push_back(idx);
  }
  std::stable_sort(newpols.begin(), newpols.end(), [&](std::size_t a, std::size_t b) {
    return sig_cmp(store_.sig(a), store_.sig(b), ring_.order) < 0;
  });
  return newpols;
}

std::vector<std::size_t> Engine::reduction(std::vector<std::size_t> todo,
                                           const IterationState& state,
                                           const std::vector<std::size_t>& curr) {
  std::stable_sort(todo.begin(), todo.end(), [&](std::size_t a, std::size_t b) {
    return sig_cmp(store_.sig(a), store_.sig(b), ring_.order) < 0;
  });
  std::vector<std::size_t> done;
  std::vector<std::size_t> curr_plus_done = curr;
  while (!todo.empty()) {
    const std::size_t k = todo.front();
    todo.erase(todo.begin());

    const LabeledPolynomial& entry = store_.at(k);
    if (options_.certified && entry.cofactors) {
      Cofactors h = *entry.cofactors;
      Polynomial nf = normal_form_observed(
          entry.poly, state.bprev, state.bprev_heads, ring_, &counter_,
          [&](std::size_t idx, Coeff c, const Monomial& m) {
            h = cofactors_sub_mul(std::move(h), c, m, state.bprev_cofactors.at(idx), ring_);
          });
      store_.replace_poly(k, std::move(nf), std::move(h));
      certify(k, state.system);
    } else {
      Polynomial nf = normal_form_observed(entry.poly, state.bprev, state.bprev_heads, ring_,
                                           &counter_, [](std::size_t, Coeff, const Monomial&) {});
      store_.replace_poly(k, std::move(nf));
    }

    TopReductionResult r = top_reduction(k, state, curr_plus_done);
    for (std::size_t c : r.completed) {
      done.push_back(c);
      curr_plus_done.push_back(c);
    }
    for (std::size_t j : r.redo) insert_by_signature(todo, j);
  }
  return done;
}

TopReductionResult Engine::top_reduction(std::size_t k, const IterationState& state,
                                         const std::vector<std::size_t>& curr_plus_done) {
  const LabeledPolynomial& entry = store_.at(k);
  if (entry.poly.is_zero()) {
    ++current_.zero_reductions;
    trace_line("Reduction to zero!");
    return {};
  }
  const std::optional<std::size_t> found = find_reductor(k, state, curr_plus_done);
  if (!found) {
    const Coeff inv = ring_.field.inv(entry.poly.head_coeff());
    std::optional<Cofactors> h;
    if (entry.cofactors) h = cofactors_scale(*entry.cofactors, inv, ring_.one(), ring_);
    store_.replace_poly(k, scale(entry.poly, inv, ring_), std::move(h));
    certify(k, state.system);
    return {{k}, {}};
  }
  const std::size_t j = *found;
  const LabeledPolynomial& red = store_.at(j);
  const Monomial u = mono_div(entry.poly.head_monomial(), red.poly.head_monomial());
  const Coeff c = ring_.field.div(entry.poly.head_coeff(), red.poly.head_coeff());
  Polynomial p = top_reduce_step(entry.poly, red.poly, ring_, &counter_);
  std::optional<Cofactors> h;
  if (entry.cofactors && red.cofactors) {
    h = cofactors_sub_mul(*entry.cofactors, c, u, *red.cofactors, ring_);
  }
  if (!p.is_zero()) {
    const Coeff inv = ring_.field.inv(p.head_coeff());
    p = scale(p, inv, ring_);
    if (h) h = cofactors_scale(std::move(*h), inv, ring_.one(), ring_);
  }
  Signature reductor_sig = sig_mul(u, red.sig);
  if (sig_cmp(reductor_sig, entry.sig, ring_.order) < 0) {
    store_.replace_poly(k, std::move(p), std::move(h));
    certify(k, state.system);
    return {{}, {k}};
  }
  const std::size_t n = store_.append(reductor_sig, std::move(p), std::move(h));
  rules_.add_rule(reductor_sig, n);
  ++current_.unsafe_reductions;
  certify(n, state.system);
  return {{}, {k, n}};
}

std::optional<std::size_t> Engine::find_reductor(std::size_t k, const IterationState& state,
                                                 const std::vector<std::size_t>& curr) {
  const Monomial& t = store_.poly(k).head_monomial();
  const Signature& sk = store_.sig(k);
  for (std::size_t j : curr) {
    const Monomial& tj = store_.poly(j).head_monomial();
    if (!tj.divides(t)) continue;
    const Monomial u = mono_div(t, tj);
    const Signature& sj = store_.sig(j);
    if (sig_mul(u, sj) == sk) continue;
    if (rewritable(u, j)) continue;
    if (state.bprev_heads.find(u * sj.monomial()) != DivisorIndex::npos) continue;
    return j;
  }
  return std::nullopt;
}

std::vector<std::size_t> Engine::incremental_basis(const IterationState& state) {
  const std::size_t curridx = store_.size();
  std::vector<std::size_t> curr = state.prev;
  curr.push_back(curridx);
  rules_.ensure(state.index);

  // Pairs already rewritable when created are dropped here as well as in
  // compute_spols. A rewritable multiple stays rewritable, so this changes
  // only the pair counts, which then match the reference trace.
  std::vector<CriticalPair> pending;
  auto enqueue = [&](std::size_t k, std::size_t l) {
    auto cp = critical_pair(k, l, state);
    if (cp && !rewritable(cp->u, cp->k) && !rewritable(cp->v, cp->l)) {
      pending.push_back(std::move(*cp));
    }
  };
  for (std::size_t j : state.prev) enqueue(curridx, j);
  while (!pending.empty()) {
    unsigned d = pending.front().degree();
    for (const CriticalPair& cp : pending) d = std::min(d, cp.degree());
    std::vector<CriticalPair> batch;
    std::vector<CriticalPair> rest;
    for (CriticalPair& cp : pending) {
      (cp.degree() == d ? batch : rest).push_back(std::move(cp));
    }
    pending = std::move(rest);
    trace_line("Processing " + std::to_string(batch.size()) + " critical pairs of degree " +
               std::to_string(d));
    current_.pairs_by_degree[d] += batch.size();
    if (!stats_.degree_sequences.empty()) stats_.degree_sequences.back().push_back(d);

    std::vector<std::size_t> spols = compute_spols(std::move(batch));
    std::vector<std::size_t> done = reduction(std::move(spols), state, curr);
    for (std::size_t k : done) {
      for (std::size_t j : curr) enqueue(k, j);
      curr.push_back(k);
    }
  }
  return curr;
}

}  // namespace f5c
