#include "f5c/drivers.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace f5c {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::f5: return "f5";
    case Variant::f5r: return "f5r";
    case Variant::f5c: return "f5c";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "f5") return Variant::f5;
  if (name == "f5r") return Variant::f5r;
  if (name == "f5c") return Variant::f5c;
  throw InvalidInput("unknown variant '" + std::string(name) + "'");
}

void VariantConfig::validate() const {
  if (skip_rule_rebuild && variant != Variant::f5c) {
    throw InvalidInput("skip_rule_rebuild is only meaningful for f5c");
  }
}

std::vector<Polynomial> prepare_generators(std::span<const Polynomial> F, const Ring& ring) {
  if (F.empty()) throw InvalidInput("empty generator list");
  for (const Polynomial& f : F) {
    if (f.is_zero()) throw InvalidInput("zero generator");
    if (!f.is_homogeneous()) throw InvalidInput("generator is not homogeneous");
  }
  std::vector<std::size_t> order(F.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Polynomial& fa = F[a];
    const Polynomial& fb = F[b];
    if (fa.degree() != fb.degree()) return fa.degree() < fb.degree();
    return ring.order.less(fa.head_monomial(), fb.head_monomial());
  });
  std::vector<Polynomial> out;
  out.reserve(F.size());
  for (std::size_t i : order) out.push_back(make_monic(F[i], ring));
  return out;
}

std::vector<std::size_t> setup_reduced_basis(Engine& engine, const std::vector<std::size_t>& curr,
                                             bool skip_rules) {
  const Ring& ring = engine.ring();
  std::vector<Polynomial> polys;
  polys.reserve(curr.size());
  for (std::size_t k : curr) polys.push_back(engine.store().poly(k));
  std::vector<Polynomial> B = interreduce(std::move(polys), ring, &engine.interreduction_counter());

  PolyStore& store = engine.store();
  store.clear();
  std::vector<std::size_t> indices;
  const bool certified = engine.options().certified;
  for (std::size_t j = 1; j <= B.size(); ++j) {
    std::optional<Cofactors> h;
    if (certified) h = unit_cofactors(j, B.size(), ring);
    indices.push_back(store.append(Signature(ring.one(), j), B[j - 1], std::move(h)));
  }
  for (std::size_t k : indices) engine.certify(k, B);

  RuleList& rules = engine.rules();
  rules.reset(B.size());
  if (!skip_rules) {
    for (std::size_t j = 1; j < B.size(); ++j) {
      const Monomial& t = B[j - 1].head_monomial();
      for (std::size_t k = j + 1; k <= B.size(); ++k) {
        const Monomial& tk = B[k - 1].head_monomial();
        rules.add_rule(Signature(mono_div(mono_lcm(t, tk), tk), k), 0);
      }
    }
  }
  return indices;
}

namespace {

std::vector<Polynomial> polys_of(const PolyStore& store, const std::vector<std::size_t>& idx) {
  std::vector<Polynomial> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(store.poly(k));
  return out;
}

std::vector<Cofactors> cofactors_of(const PolyStore& store, const std::vector<std::size_t>& idx) {
  std::vector<Cofactors> out;
  for (std::size_t k : idx) out.push_back(store.at(k).cofactors.value_or(Cofactors{}));
  return out;
}

void trace(const VariantConfig& config, const std::string& line) {
  if (config.trace) *config.trace << line << '\n';
}

BasisResult unit_result(const Ring& ring, RunStats stats) {
  stats.basis_size_final = 1;
  return BasisResult{{Polynomial::constant(1, ring)}, std::move(stats), true};
}

}  // namespace

BasisResult compute_basis(std::span<const Polynomial> F, const Ring& ring,
                          const VariantConfig& config) {
  config.validate();
  const std::vector<Polynomial> fs = prepare_generators(F, ring);
  const Variant variant = config.variant;

  Engine engine(ring, EngineOptions{config.certified, config.store_cap, config.trace});
  engine.stats().algorithm = std::string(to_string(variant));

  if (std::any_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.is_constant(); })) {
    trace(config, "");
    trace(config, "number of zero reductions: 0");
    trace(config, "number of elements in g: 1");
    return unit_result(ring, engine.stats());
  }

  PolyStore& store = engine.store();
  const bool certified = config.certified;
  auto unit = [&](std::size_t idx) -> std::optional<Cofactors> {
    if (!certified) return std::nullopt;
    return unit_cofactors(idx, idx, ring);
  };

  engine.rules().reset(1);
  std::vector<std::size_t> prev{store.append(Signature(ring.one(), 1), fs[0], unit(1))};
  std::vector<Polynomial> B{fs[0]};
  std::vector<Cofactors> B_cof;
  if (certified) B_cof.push_back(*unit(1));
  std::vector<Polynomial> system{fs[0]};

  for (std::size_t i = 2; i <= fs.size(); ++i) {
    trace(config, "Iteration " + std::to_string(i));
    engine.begin_iteration(i);
    const Polynomial& fi = fs[i - 1];

    const std::size_t sig_index = variant == Variant::f5c ? store.size() + 1 : i;
    if (variant == Variant::f5c) {
      system = B;
    }
    system.push_back(fi);
    store.append(Signature(ring.one(), sig_index), fi, unit(sig_index));
    engine.certify(store.size(), system);

    IterationState state(sig_index, prev, B);
    if (certified) {
      state.bprev_cofactors = B_cof;
      state.system = system;
    }
    std::vector<std::size_t> curr = engine.incremental_basis(state);

    if (std::any_of(curr.begin(), curr.end(),
                    [&](std::size_t k) { return store.poly(k).is_one(); })) {
      engine.end_iteration(curr.size());
      return unit_result(ring, engine.stats());
    }

    const std::size_t curr_size = curr.size();
    switch (variant) {
      case Variant::f5:
        prev = std::move(curr);
        B = polys_of(store, prev);
        if (certified) B_cof = cofactors_of(store, prev);
        break;
      case Variant::f5r: {
        prev = std::move(curr);
        TrackedBasis reduced = interreduce_tracked(
            polys_of(store, prev), certified ? cofactors_of(store, prev) : std::vector<Cofactors>{},
            ring, &engine.interreduction_counter());
        B = std::move(reduced.basis);
        if (certified) B_cof = std::move(reduced.companions);
        break;
      }
      case Variant::f5c:
        prev = setup_reduced_basis(engine, curr, config.skip_rule_rebuild);
        B = polys_of(store, prev);
        if (certified) B_cof = cofactors_of(store, prev);
        break;
    }
    trace(config, std::to_string(curr_size) + " polynomials in basis");
    engine.end_iteration(curr_size);
  }

  const std::uint64_t zeros = engine.stats().totals().zero_reductions;
  trace(config, "");
  trace(config, "number of zero reductions: " + std::to_string(zeros));
  trace(config, "number of elements in g: " + std::to_string(B.size()));

  BasisResult result;
  result.stats = engine.stats();
  result.stats.basis_size_final = B.size();
  // A single monic generator is trivially reduced.
  result.reduced = variant != Variant::f5 || fs.size() == 1;
  result.basis = std::move(B);
  return result;
}

BasisResult f5(std::span<const Polynomial> F, const Ring& ring, VariantConfig config) {
  config.variant = Variant::f5;
  return compute_basis(F, ring, config);
}

BasisResult f5r(std::span<const Polynomial> F, const Ring& ring, VariantConfig config) {
  config.variant = Variant::f5r;
  return compute_basis(F, ring, config);
}

BasisResult f5c(std::span<const Polynomial> F, const Ring& ring, VariantConfig config) {
  config.variant = Variant::f5c;
  return compute_basis(F, ring, config);
}

Ring homogenize(std::vector<Polynomial>& F, const Ring& ring, std::string_view name) {
  std::vector<std::string> vars = ring.variables;
  std::string fresh(name);
  for (int n = 1; std::find(vars.begin(), vars.end(), fresh) != vars.end(); ++n) {
    fresh = std::string(name) + std::to_string(n);
  }
  vars.push_back(fresh);
  Ring out(ring.field, ring.order, std::move(vars));
  const std::size_t h = ring.arity();
  for (Polynomial& f : F) {
    const unsigned d = f.degree();
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      Monomial m(out.arity());
      for (std::size_t v = 0; v < ring.arity(); ++v) m.set(v, t.mono[v]);
      m.set(h, d - t.mono.degree());
      terms.push_back(Term{t.coeff, m});
    }
    f = Polynomial::from_terms(std::move(terms), out);
  }
  return out;
}

}  // namespace f5c
