#ifndef ARAPATH_RING_HPP
#define ARAPATH_RING_HPP

#include <cstdint>

#include "arapath/order.hpp"
#include "arapath/prime_field.hpp"

namespace arapath {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// GF(p)[x1..xN] with a fixed monomial order. Cheap value type; two rings
/// are interchangeable iff they compare equal.
class Ring {
public:
  explicit Ring(std::int32_t nvars,
                std::uint32_t characteristic = kDefaultCharacteristic,
                OrderKind order = OrderKind::degrevlex)
      : field_(characteristic), nvars_(nvars), order_(order) {
    if (nvars < 0) throw DomainError("ring needs a nonnegative variable count");
  }

  std::int32_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  OrderKind order() const { return order_; }

  Ring extended(std::int32_t extra_vars) const {
    return Ring(nvars_ + extra_vars, characteristic(), order_);
  }
  Ring resized(std::int32_t nvars) const {
    return Ring(nvars, characteristic(), order_);
  }

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  PrimeField field_;
  std::int32_t nvars_;
  OrderKind order_;
};

}  // namespace arapath

#endif
