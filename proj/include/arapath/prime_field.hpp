#ifndef ARAPATH_PRIME_FIELD_HPP
#define ARAPATH_PRIME_FIELD_HPP

#include <cstdint>

#include "arapath/errors.hpp"

namespace arapath {

bool is_prime(std::uint32_t n);

/// Arithmetic in GF(p), 2 <= p < 2^31, elements as canonical
/// representatives in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < p < 2^31: no overflow
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  /// Multiplicative inverse by extended Euclid; inv(0) is an error.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

}  // namespace arapath

#endif
