#include "f5c/field.hpp"

#include <string>

namespace f5c {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t characteristic) : p_(characteristic) {
  if (characteristic >= (1u << 31) || !is_prime(characteristic)) {
    throw FieldError("characteristic " + std::to_string(characteristic) +
                     " is not a prime below 2^31");
  }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw FieldError("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace f5c
