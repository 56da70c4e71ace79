#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string_view>

#include "f5c/errors.hpp"

namespace f5c {

using Exponent = std::uint16_t;
inline constexpr std::size_t kMaxVariables = 32;

/// A power product over a fixed number of variables. Variable 0 has the
/// highest precedence. Storage is inline; unused slots are always zero so
/// equality can compare the whole array.
class Monomial {
 public:
  /// The constant monomial 1 in `arity` variables.
  explicit Monomial(std::size_t arity = 0);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t arity() const noexcept { return arity_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  /// Bit v set iff variable v occurs. Used to reject divisibility quickly.
  std::uint32_t support() const noexcept { return support_; }

  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < arity_; ++i) h = (h ^ exp_[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t arity_ = 0;

  void check_arity(const Monomial& other) const {
    if (arity_ != other.arity_) throw ArityMismatch(arity_, other.arity_);
  }
  [[noreturn]] static void exponent_overflow();
  friend Monomial mono_lcm(const Monomial&, const Monomial&);
  friend Monomial mono_div(const Monomial&, const Monomial&);
  friend Monomial mono_gcd(const Monomial&, const Monomial&);
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
/// a / b; throws NotDivisible unless b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
inline bool coprime(const Monomial& a, const Monomial& b) {
  return (a.support() & b.support()) == 0;
}

enum class OrderKind { grevlex, lex, deglex };

std::string_view to_string(OrderKind kind);
/// Accepts "grevlex"/"dp", "lex"/"lp", "deglex"/"Dp". Throws Error otherwise.
OrderKind parse_order_kind(std::string_view name);

/// An admissible monomial order; variable precedence is declaration order.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline bool Monomial::divides(const Monomial& other) const {
  check_arity(other);
  if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
  // Unused slots are zero, so the fixed-width loop is safe and vectorizes.
  bool fits = true;
  for (std::size_t i = 0; i < kMaxVariables; ++i) fits &= exp_[i] <= other.exp_[i];
  return fits;
}

inline Monomial& Monomial::operator*=(const Monomial& other) {
  check_arity(other);
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const auto e = static_cast<Exponent>(exp_[i] + other.exp_[i]);
    overflow |= e < exp_[i];
    exp_[i] = e;
  }
  if (overflow) exponent_overflow();
  degree_ += other.degree_;
  support_ |= other.support_;
  return *this;
}

inline std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity());
  const std::size_t n = a.arity();
  switch (kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::deglex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // smaller exponent in the last differing variable wins
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering order_cmp(const MonomialOrder& order, const Monomial& a,
                                      const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace f5c
