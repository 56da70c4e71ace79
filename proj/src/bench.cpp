#include "f5c/bench.hpp"

#include <chrono>
#include <future>

namespace f5c {

namespace {

Ring benchmark_ring(std::vector<std::string> vars, std::uint32_t p, OrderKind order) {
  return Ring(PrimeField(p), MonomialOrder{order}, std::move(vars));
}

}  // namespace

BenchmarkSystem katsura(std::size_t n, std::uint32_t p, OrderKind order) {
  if (n < 1) throw InvalidInput("katsura requires n >= 1");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("h");
  Ring ring = benchmark_ring(std::move(vars), p, order);
  const std::size_t h = n + 1;
  const PrimeField& F = ring.field;

  std::vector<Polynomial> gens;
  std::vector<Term> linear{{1, ring.var(0)}, {F.neg(1), ring.var(h)}};
  for (std::size_t i = 1; i <= n; ++i) linear.push_back({F.from_int(2), ring.var(i)});
  gens.push_back(Polynomial::from_terms(std::move(linear), ring));

  const auto N = static_cast<long>(n);
  for (long m = 0; m < N; ++m) {
    std::vector<Term> terms;
    for (long l = -N; l <= N; ++l) {
      const long a = std::labs(l);
      const long b = std::labs(m - l);
      if (b > N) continue;
      terms.push_back({1, ring.var(static_cast<std::size_t>(a)) * ring.var(static_cast<std::size_t>(b))});
    }
    terms.push_back({F.neg(1), ring.var(static_cast<std::size_t>(m)) * ring.var(h)});
    gens.push_back(Polynomial::from_terms(std::move(terms), ring));
  }
  return {"katsura-" + std::to_string(n), std::move(ring), std::move(gens)};
}

BenchmarkSystem cyclic(std::size_t n, std::uint32_t p, OrderKind order) {
  if (n < 2) throw InvalidInput("cyclic requires n >= 2");
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("h");
  Ring ring = benchmark_ring(std::move(vars), p, order);

  std::vector<Polynomial> gens;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m = ring.one();
      for (std::size_t j = 0; j < k; ++j) m *= ring.var((i + j) % n);
      terms.push_back({1, m});
    }
    gens.push_back(Polynomial::from_terms(std::move(terms), ring));
  }
  Monomial all = ring.one();
  for (std::size_t i = 0; i < n; ++i) all *= ring.var(i);
  gens.push_back(Polynomial::from_terms(
      {{1, all}, {ring.field.neg(1), ring.var(n, static_cast<unsigned>(n))}}, ring));
  return {"cyclic-" + std::to_string(n), std::move(ring), std::move(gens)};
}

Comparison compare_variants(std::span<const Polynomial> F, const Ring& ring,
                            std::span<const Variant> variants, const CompareOptions& options) {
  auto run_one = [&](Variant v) {
    VariantConfig config;
    config.variant = v;
    config.skip_rule_rebuild = options.skip_rule_rebuild && v == Variant::f5c;
    config.certified = options.certified;
    config.store_cap = options.store_cap;
    const auto start = std::chrono::steady_clock::now();
    BasisResult r = compute_basis(F, ring, config);
    VariantRun run{v, std::move(r.stats),
                   r.reduced ? std::move(r.basis) : interreduce(std::move(r.basis), ring), 0.0};
    run.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
  };
  const auto launch = options.parallel ? std::launch::async : std::launch::deferred;

  std::vector<std::future<VariantRun>> futures;
  for (Variant v : variants) futures.push_back(std::async(launch, run_one, v));
  std::future<std::vector<Polynomial>> oracle;
  if (options.use_oracle) {
    oracle = std::async(launch, [&] { return buchberger_reduced(F, ring); });
  }

  Comparison out;
  for (auto& f : futures) out.runs.push_back(f.get());
  if (options.use_oracle) out.oracle_basis = oracle.get();

  out.agreement = true;
  const std::vector<Polynomial>* reference =
      options.use_oracle ? &out.oracle_basis
                         : (out.runs.empty() ? nullptr : &out.runs.front().reduced_basis);
  for (const VariantRun& r : out.runs) {
    if (reference && r.reduced_basis != *reference) out.agreement = false;
  }
  return out;
}

}  // namespace f5c
