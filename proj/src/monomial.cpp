#include "f5c/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace f5c {

namespace {

void check_exponent(unsigned long e) {
  if (e > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow");
}

}  // namespace

void Monomial::exponent_overflow() { throw Error("exponent overflow"); }

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  if (arity > kMaxVariables) {
    throw Error("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(from_exponents(std::span<const unsigned>(exponents.begin(), exponents.size()))) {}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  check_exponent(e);
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
  if (e != 0) {
    support_ |= 1u << i;
  } else {
    support_ &= ~(1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  r.support_ = a.support_ | b.support_;
  unsigned d = 0;
  for (std::size_t i = 0; i < a.arity_; ++i) d += r.exp_[i];
  r.degree_ = d;
  return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.set(i, std::min(a.exp_[i], b.exp_[i]));
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw NotDivisible();
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < a.arity_; ++i) {
    if (r.exp_[i] != 0) support |= 1u << i;
  }
  r.support_ = support;
  return r;
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "grevlex" || name == "dp") return OrderKind::grevlex;
  if (name == "lex" || name == "lp") return OrderKind::lex;
  if (name == "deglex" || name == "Dp") return OrderKind::deglex;
  throw Error("unknown monomial order '" + std::string(name) + "'");
}

}  // namespace f5c
