#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "f5c/io.hpp"
#include "f5c/polynomial.hpp"

namespace f5c::test {

inline Ring make_ring(std::vector<std::string> vars, std::uint32_t p = 32003,
                      OrderKind kind = OrderKind::grevlex) {
  return Ring(PrimeField(p), MonomialOrder{kind}, std::move(vars));
}

inline Polynomial P(const Ring& ring, std::string_view text) {
  return parse_polynomial(text, ring);
}

inline std::vector<Polynomial> Ps(const Ring& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (std::string_view t : texts) out.push_back(P(ring, t));
  return out;
}

inline Monomial M(const Ring& ring, std::string_view text) {
  return P(ring, text).head_monomial();
}

inline Ring xyzt() { return make_ring({"x", "y", "z", "t"}); }

inline std::vector<Polynomial> example_system(const Ring& r) {
  return Ps(r, {"y*z^3 - x^2*t^2", "x*z^2 - y^2*t", "x^2*y - z^2*t"});
}

/// The reduced basis of the example ideal, ascending by head monomial.
inline std::vector<Polynomial> example_reduced(const Ring& r) {
  return Ps(r, {"x*z^2 - y^2*t", "x^2*y - z^2*t", "y*z^3 - x^2*t^2", "y^3*z*t - x^3*t^2",
                "x*y^3*t - z^4*t", "z^5*t - x^4*t^2", "y^5*t^2 - x^4*z*t^2",
                "x^5*t^2 - z^2*t^5"});
}

/// The unreduced 10-element output listed by the reference F5 run.
inline std::vector<Polynomial> example_f5(const Ring& r) {
  return Ps(r, {"y*z^3 - x^2*t^2", "x^2*y - z^2*t", "x*z^2 - y^2*t", "x*y^3*t - z^4*t",
                "z^6*t - y^5*t^2", "y^3*z*t - x^3*t^2", "z^5*t - x^4*t^2",
                "y^5*t^2 - x^4*z*t^2", "x^5*t^2 - y^2*z^3*t^2", "y^6*t^2 - x*y^2*z*t^4"});
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t arity, unsigned degree) {
  std::vector<unsigned> e(arity, 0);
  std::uniform_int_distribution<std::size_t> pick(0, arity - 1);
  for (unsigned d = 0; d < degree; ++d) ++e[pick(rng)];
  return Monomial::from_exponents(e);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, unsigned max_degree,
                                    std::size_t max_terms, bool homogeneous) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<Coeff> coeff(1, ring.field.characteristic() - 1);
  const unsigned d = deg(rng);
  std::vector<Term> terms;
  for (std::size_t i = count(rng); i > 0; --i) {
    terms.push_back(Term{coeff(rng), random_monomial(rng, ring.arity(), homogeneous ? d : deg(rng))});
  }
  return Polynomial::from_terms(std::move(terms), ring);
}

/// A random homogeneous system with at most 4 variables, 3 generators and
/// degree 3; the ring is written to `ring`.
inline std::vector<Polynomial> random_system(std::mt19937_64& rng, Ring& ring) {
  static const std::vector<std::string> names{"a", "b", "c", "d"};
  std::uniform_int_distribution<std::size_t> nvars(2, 4);
  std::uniform_int_distribution<std::size_t> ngens(1, 3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  std::uniform_int_distribution<std::size_t> nterms(1, 4);
  std::uniform_int_distribution<Coeff> coeff(1, 32002);
  ring = make_ring(std::vector<std::string>(names.begin(), names.begin() + nvars(rng)));
  const std::size_t target = ngens(rng);
  std::vector<Polynomial> F;
  while (F.size() < target) {
    const unsigned d = deg(rng);
    std::vector<Term> terms;
    for (std::size_t i = nterms(rng); i > 0; --i) {
      terms.push_back(Term{coeff(rng), random_monomial(rng, ring.arity(), d)});
    }
    Polynomial f = Polynomial::from_terms(std::move(terms), ring);
    if (!f.is_zero()) F.push_back(std::move(f));
  }
  return F;
}

}  // namespace f5c::test
