#pragma once

#include <cstdint>

#include "f5c/errors.hpp"

namespace f5c {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ for a prime 2 <= p < 2^31. Elements are canonical
/// representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws FieldError on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const noexcept;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace f5c
