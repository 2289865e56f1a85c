#ifndef ARAPATH_ORDER_HPP
#define ARAPATH_ORDER_HPP

#include <compare>
#include <string>

#include "arapath/monomial.hpp"

namespace arapath {

enum class OrderKind { degrevlex, lex };

std::string to_string(OrderKind kind);

/// Total multiplicative monomial order with 1 minimal.
///  - degrevlex: higher total degree wins; ties broken by the last
///    differing variable, where the smaller exponent wins.
///  - lex: first differing variable, larger exponent wins.
std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             OrderKind kind);

struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::int32_t nvars = 0;

  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, kind);
  }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace arapath

#endif
