#include "arapath/prime_field.hpp"

#include <utility>

namespace arapath {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("characteristic must be a prime in [2, 2^31): got " +
                      std::to_string(p));
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inversion of zero in GF(p)");
  // Extended Euclid on (a, p); coefficients tracked mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace arapath
