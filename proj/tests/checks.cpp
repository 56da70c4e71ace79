#include "checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "f5c/drivers.hpp"
#include "support.hpp"

namespace f5c::checks {

namespace {

constexpr std::uint32_t kChar = 32003;
const std::vector<Variant> kVariants{Variant::f5, Variant::f5r, Variant::f5c};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(s < 10 ? 2 : 0);
  out << std::fixed << s << " s";
  return out.str();
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<Polynomial> monic_all(const std::vector<Polynomial>& G, const Ring& r) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : G) out.push_back(make_monic(g, r));
  return out;
}

std::vector<Monomial> sorted_heads(const std::vector<Polynomial>& G, const Ring& r) {
  std::vector<Monomial> out;
  for (const Polynomial& g : G) out.push_back(g.head_monomial());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return r.order.less(a, b);
  });
  return out;
}

/// Runs `body` over every case; stops at the first failing case and reports it.
CheckResult over_cases(std::size_t n, const std::string& what,
                       const std::function<std::string(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) {
    std::string failure = body(i);
    if (!failure.empty()) return {false, what + ": case " + std::to_string(i) + ": " + failure};
  }
  return {true, what + ": " + std::to_string(n) + " cases"};
}

std::vector<unsigned> iteration_sizes(const RunStats& s) {
  std::vector<unsigned> out;
  for (const IterationStats& it : s.iterations) out.push_back(static_cast<unsigned>(it.basis_size));
  return out;
}

}  // namespace

std::vector<BenchmarkSystem> equivalence_systems() {
  std::vector<BenchmarkSystem> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(katsura(n, kChar));
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(cyclic(n, kChar));
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    Ring ring = test::make_ring({"a"});
    std::vector<Polynomial> F = test::random_system(rng, ring);
    out.push_back({"random-" + std::to_string(i), ring, std::move(F)});
  }
  return out;
}

CheckResult example_golden() {
  Stopwatch clock;
  Ring r = test::xyzt();
  const auto F = test::example_system(r);
  const auto want_f5 = test::example_f5(r);
  const auto want_reduced = test::example_reduced(r);

  BasisResult a = f5(F, r);
  BasisResult c = f5c(F, r);
  const auto oracle = buchberger_reduced(F, r);
  const double t = clock.seconds();

  std::vector<std::string> problems;
  auto got = monic_all(a.basis, r);
  if (got.size() != 10) problems.push_back("f5 returned " + std::to_string(got.size()));
  for (const Polynomial& g : want_f5) {
    if (std::find(got.begin(), got.end(), g) == got.end()) {
      problems.push_back("f5 misses " + render(g, r));
    }
  }
  if (sorted_heads(got, r) != sorted_heads(want_f5, r)) problems.push_back("f5 head monomials");
  if (c.basis != want_reduced) problems.push_back("f5c basis");
  if (oracle != want_reduced) problems.push_back("buchberger basis");
  if (t >= 1.0) problems.push_back("runtime " + fmt_seconds(t));
  if (!problems.empty()) return {false, join(problems)};
  return {true, "f5 gives the 10 reference polynomials, f5c and buchberger the 8 reduced ones (" +
                    fmt_seconds(t) + ")"};
}

CheckResult example_trace() {
  Ring r = test::xyzt();
  std::ostringstream trace;
  VariantConfig config{Variant::f5};
  config.trace = &trace;
  f5(test::example_system(r), r, config);

  std::vector<std::vector<unsigned>> degrees;
  std::string zero_line;
  std::istringstream in(trace.str());
  for (std::string line; std::getline(in, line);) {
    unsigned count = 0, degree = 0;
    if (line.rfind("Iteration ", 0) == 0) {
      degrees.emplace_back();
    } else if (std::sscanf(line.c_str(), "Processing %u critical pairs of degree %u", &count,
                           &degree) == 2 &&
               !degrees.empty()) {
      degrees.back().push_back(degree);
    } else if (line.rfind("number of zero reductions:", 0) == 0) {
      zero_line = line;
    }
  }
  const std::vector<std::vector<unsigned>> want{{5, 7}, {5, 6, 7, 8}};
  std::string seen;
  for (const auto& d : degrees) seen += (seen.empty() ? "[" : " [") + join(d) + "]";
  const bool ok = degrees == want && zero_line == "number of zero reductions: 0";
  return {ok, "degrees " + seen + ", \"" + zero_line + "\""};
}

CheckResult oracle_equivalence() {
  Stopwatch clock;
  std::size_t count = 0;
  for (const BenchmarkSystem& sys : equivalence_systems()) {
    const Ring& r = sys.ring;
    const auto oracle = buchberger_reduced(sys.generators, r);
    for (Variant v : kVariants) {
      BasisResult res = compute_basis(sys.generators, r, VariantConfig{v});
      const auto reduced = res.reduced ? res.basis : interreduce(res.basis, r);
      if (reduced != oracle) {
        return {false, sys.name + ": " + std::string(to_string(v)) + " disagrees with buchberger"};
      }
      if (!groebner_check(res.basis, r)) {
        return {false, sys.name + ": " + std::string(to_string(v)) + " fails groebner_check"};
      }
    }
    ++count;
  }
  const double t = clock.seconds();
  if (t >= 300.0) return {false, "runtime " + fmt_seconds(t)};
  return {true, std::to_string(count) + " systems agree with buchberger (" + fmt_seconds(t) + ")"};
}

CheckResult katsura_zero_reductions() {
  Stopwatch clock;
  for (std::size_t n = 1; n <= 7; ++n) {
    BenchmarkSystem sys = katsura(n, kChar);
    for (Variant v : kVariants) {
      BasisResult res = compute_basis(sys.generators, sys.ring, VariantConfig{v});
      const auto zeros = res.stats.totals().zero_reductions;
      if (zeros != 0) {
        return {false, sys.name + " " + std::string(to_string(v)) + ": " + std::to_string(zeros) +
                           " zero reductions"};
      }
    }
  }
  const double t = clock.seconds();
  if (t >= 120.0) return {false, "runtime " + fmt_seconds(t)};
  return {true, "katsura-1..7: no zero reductions in f5, f5r, f5c (" + fmt_seconds(t) + ")"};
}

CheckResult reduction_counts() {
  struct Row {
    BenchmarkSystem sys;
    std::array<double, 3> published;
  };
  const std::vector<Row> rows{
      {katsura(4, kChar), {774, 289, 222}},         {katsura(5, kChar), {14597, 5355, 3985}},
      {katsura(6, kChar), {1029614, 77756, 58082}}, {cyclic(5, kChar), {510, 506, 446}},
      {cyclic(6, kChar), {41333, 23780, 14167}},
  };
  CompareOptions options;
  options.use_oracle = false;
  options.parallel = false;

  bool direction = true, magnitude = true, collapse = true;
  std::ostringstream detail;
  detail << std::fixed;
  for (const Row& row : rows) {
    Comparison cmp = compare_variants(row.sys.generators, row.sys.ring, kVariants, options);
    std::array<double, 3> steps{};
    for (std::size_t i = 0; i < 3; ++i) {
      steps[i] = static_cast<double>(cmp.runs[i].stats.totals().reduction_steps);
    }
    direction = direction && steps[2] <= steps[1] && steps[1] <= steps[0] && steps[2] < steps[0];
    detail.precision(0);
    detail << row.sys.name << " " << steps[0] << "/" << steps[1] << "/" << steps[2] << " (published "
           << row.published[0] << "/" << row.published[1] << "/" << row.published[2];
    std::vector<std::string> off;
    for (std::size_t i = 0; i < 3; ++i) {
      const double ratio = row.published[i] / steps[i];
      if (std::abs(std::log10(ratio)) > 1.0) {
        std::ostringstream o;
        o.precision(1);
        o << std::fixed << to_string(kVariants[i]) << " x" << ratio;
        off.push_back(o.str());
      }
    }
    if (!off.empty()) {
      magnitude = false;
      detail << "; beyond 10x: " << join(off);
    }
    detail << ")";
    if (row.sys.name == "katsura-5" || row.sys.name == "katsura-6") {
      const double ratio = steps[2] / steps[0];
      collapse = collapse && ratio < 0.6;
      detail.precision(2);
      detail << " f5c/f5=" << ratio;
    }
    if (&row != &rows.back()) detail << "; ";
  }
  std::string summary = std::string("direction ") + (direction ? "ok" : "VIOLATED") +
                        ", collapse " + (collapse ? "ok" : "VIOLATED") + ", magnitude " +
                        (magnitude ? "ok" : "VIOLATED") + " -- ";
  return {direction && magnitude && collapse, summary + detail.str()};
}

CheckResult skip_rules_equivalence() {
  std::size_t count = 0;
  for (const BenchmarkSystem& sys : equivalence_systems()) {
    VariantConfig with{Variant::f5c};
    VariantConfig without{Variant::f5c};
    without.skip_rule_rebuild = true;
    BasisResult a = compute_basis(sys.generators, sys.ring, with);
    BasisResult b = compute_basis(sys.generators, sys.ring, without);
    if (a.basis != b.basis) return {false, sys.name + ": bases differ"};
    if (a.stats.totals().zero_reductions != b.stats.totals().zero_reductions) {
      return {false, sys.name + ": zero reductions differ"};
    }
    ++count;
  }
  return {true, std::to_string(count) + " systems: identical bases and zero-reduction counts"};
}

CheckResult katsura9_iteration_sizes() {
  Stopwatch clock;
  BenchmarkSystem sys = katsura(9, kChar);
  const auto a = iteration_sizes(f5(sys.generators, sys.ring).stats);
  const auto c = iteration_sizes(f5c(sys.generators, sys.ring).stats);
  const double t = clock.seconds();

  bool ok = a.size() == c.size() && a.size() == 9;
  for (std::size_t k = 0; ok && k < a.size(); ++k) {
    const std::size_t i = k + 2;
    ok = i >= 5 ? c[k] < a[k] : c[k] <= a[k];
  }
  const std::vector<unsigned> pub_f5{2, 4, 8, 16, 32, 60, 132, 524, 1165};
  const std::vector<unsigned> pub_f5c{2, 4, 8, 15, 29, 51, 109, 472, 778};
  std::string detail = "f5 [" + join(a) + "], f5c [" + join(c) + "]; published columns " +
                       (a == pub_f5 && c == pub_f5c ? "replicated" : "not replicated") + " (" +
                       fmt_seconds(t) + ")";
  if (t > 1800.0) {
    ok = false;
    detail += "; over the 30 min budget";
  }
  return {ok, detail};
}

CheckResult certified_runs() {
  std::vector<BenchmarkSystem> systems;
  for (std::size_t n = 1; n <= 4; ++n) systems.push_back(katsura(n, kChar));
  for (std::size_t n = 2; n <= 4; ++n) systems.push_back(cyclic(n, kChar));
  std::uint64_t checks = 0;
  for (const BenchmarkSystem& sys : systems) {
    for (Variant v : kVariants) {
      VariantConfig config{v};
      config.certified = true;
      const CertificationReport rep =
          compute_basis(sys.generators, sys.ring, config).stats.certification;
      if (rep.admissibility_checks == 0 || !rep.clean()) {
        std::ostringstream o;
        o << sys.name << " " << to_string(v) << ": " << rep.admissibility_checks << " checks, "
          << rep.admissibility_violations << " admissibility, " << rep.rule_order_violations
          << " rule-order, " << rep.rewriter_order_violations << " rewriter-order violations";
        return {false, o.str()};
      }
      checks += rep.admissibility_checks;
    }
  }
  return {true, std::to_string(checks) + " admissibility checks, zero violations"};
}

CheckResult field_axioms_f101() {
  const PrimeField F(101);
  for (Coeff a = 0; a < 101; ++a) {
    if (F.add(a, F.neg(a)) != 0) return {false, "additive inverse of " + std::to_string(a)};
    if (a != 0 && F.mul(a, F.inv(a)) != 1) return {false, "inverse of " + std::to_string(a)};
    for (Coeff b = 0; b < 101; ++b) {
      if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) return {false, "commutativity"};
      if (F.sub(F.add(a, b), b) != a) return {false, "subtraction"};
      if (b != 0 && F.mul(F.div(a, b), b) != a) return {false, "division"};
      for (Coeff c = 0; c < 101; ++c) {
        if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) return {false, "additive associativity"};
        if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) return {false, "associativity"};
        if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) {
          return {false, "distributivity"};
        }
      }
    }
  }
  return {true, "field axioms: all of F_101"};
}

CheckResult monomial_laws() {
  // every monomial of degree <= 3 in three variables
  std::vector<Monomial> ms;
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; a + b <= 3; ++b) {
      for (unsigned c = 0; a + b + c <= 3; ++c) ms.push_back(Monomial{a, b, c});
    }
  }
  const Monomial one(3);
  for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex, OrderKind::deglex}) {
    const MonomialOrder order{kind};
    const std::string name(to_string(kind));
    for (const Monomial& a : ms) {
      if (order.less(a, one)) return {false, name + ": 1 is not minimal"};
      if (mono_lcm(a, a) != a) return {false, "lcm is not idempotent"};
      for (const Monomial& b : ms) {
        const Monomial l = mono_lcm(a, b);
        if (l != mono_lcm(b, a)) return {false, "lcm is not commutative"};
        if (mono_div(l, a) * a != l || mono_div(l, b) * b != l) return {false, "lcm / a"};
        if (mono_gcd(a, b) * l != a * b) return {false, "gcd * lcm != a * b"};
        if (a.divides(b) != (l == b)) return {false, "divides vs lcm"};
        const bool lt = order.less(a, b), gt = order.greater(a, b), eq = a == b;
        if (lt + gt + eq != 1) return {false, name + ": trichotomy"};
        for (const Monomial& c : ms) {
          if (mono_lcm(mono_lcm(a, b), c) != mono_lcm(a, mono_lcm(b, c))) {
            return {false, "lcm is not associative"};
          }
          if (lt && !order.less(a * c, b * c)) return {false, name + ": multiplicativity"};
          if (lt && order.less(b, c) && !order.less(a, c)) return {false, name + ": transitivity"};
        }
      }
    }
  }
  // ring laws for polynomials over F_101
  std::mt19937_64 rng(101);
  Ring r = test::make_ring({"x", "y", "z"}, 101);
  CheckResult ring = over_cases(500, "", [&](std::size_t) -> std::string {
    const Polynomial p = test::random_polynomial(rng, r, 3, 4, false);
    const Polynomial q = test::random_polynomial(rng, r, 3, 4, false);
    const Polynomial s = test::random_polynomial(rng, r, 3, 4, false);
    if (add(p, q, r) != add(q, p, r) || mul(p, q, r) != mul(q, p, r)) return "commutativity";
    if (mul(mul(p, q, r), s, r) != mul(p, mul(q, s, r), r)) return "associativity";
    if (mul(p, add(q, s, r), r) != add(mul(p, q, r), mul(p, s, r), r)) return "distributivity";
    if (!sub(p, p, r).is_zero()) return "p - p";
    return "";
  });
  if (!ring.passed) return {false, "polynomial ring laws" + ring.detail};
  return {true, "monomial laws: " + std::to_string(ms.size()) + "^3 triples x 3 orders"};
}

CheckResult spoly_head_cancellation() {
  std::mt19937_64 rng(17);
  Ring r = test::make_ring({"x", "y", "z"}, 101);
  return over_cases(500, "spoly head cancellation", [&](std::size_t) -> std::string {
    Polynomial p, q;
    while (p.is_zero()) p = test::random_polynomial(rng, r, 4, 5, false);
    while (q.is_zero()) q = test::random_polynomial(rng, r, 4, 5, false);
    const Polynomial s = spoly(p, q, r);
    if (!s.is_zero() &&
        !r.order.less(s.head_monomial(), mono_lcm(p.head_monomial(), q.head_monomial()))) {
      return render(p, r) + " / " + render(q, r);
    }
    return "";
  });
}

CheckResult normal_form_idempotence() {
  std::mt19937_64 rng(23);
  return over_cases(500, "normal_form idempotence", [&](std::size_t i) -> std::string {
    Ring r = test::make_ring({"a"});
    std::vector<Polynomial> F = test::random_system(rng, r);
    const bool basis = i % 2 == 0;
    const std::vector<Polynomial> G = basis ? buchberger_reduced(F, r) : F;
    const Polynomial p = test::random_polynomial(rng, r, 4, 6, false);
    const Polynomial n = normal_form(p, G, r);
    if (normal_form(n, G, r) != n) return "not idempotent";
    for (const Term& t : n.terms()) {
      if (is_top_reducible(t.mono, G)) return "reducible monomial left";
    }
    if (basis && !normal_form(sub(p, n, r), G, r).is_zero()) return "p - nf(p) not in the ideal";
    return "";
  });
}

CheckResult interreduce_uniqueness() {
  std::mt19937_64 rng(29);
  return over_cases(500, "interreduce uniqueness", [&](std::size_t) -> std::string {
    Ring r = test::make_ring({"a"});
    std::vector<Polynomial> G = buchberger_unpruned(test::random_system(rng, r), r);
    std::uniform_int_distribution<Coeff> scalar(1, r.field.characteristic() - 1);
    for (Polynomial& g : G) g = scale(g, scalar(rng), r);
    const auto reference = interreduce(G, r);
    if (!is_interreduced(reference)) return "not head-irreducible";
    for (const Polynomial& g : reference) {
      if (g.head_coeff() != 1) return "not monic";
    }
    for (int k = 0; k < 3; ++k) {
      std::shuffle(G.begin(), G.end(), rng);
      if (interreduce(G, r) != reference) return "depends on input order";
    }
    return "";
  });
}

CheckResult property_suites() {
  std::vector<std::string> parts;
  for (auto check : {field_axioms_f101, monomial_laws, spoly_head_cancellation,
                     normal_form_idempotence, interreduce_uniqueness}) {
    CheckResult res = check();
    if (!res.passed) return res;
    parts.push_back(res.detail);
  }
  std::string detail;
  for (const std::string& p : parts) detail += (detail.empty() ? "" : "; ") + p;
  return {true, detail};
}

}  // namespace f5c::checks
