#include "arapath/order.hpp"

#include <limits>

namespace arapath {

std::string to_string(OrderKind kind) {
  return kind == OrderKind::degrevlex ? "degrevlex" : "lex";
}

namespace {

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // Walk from the highest present variable downwards; at the last
  // differing variable the smaller exponent wins.
  auto ia = a.factors().rbegin(), ea = a.factors().rend();
  auto ib = b.factors().rbegin(), eb = b.factors().rend();
  while (ia != ea || ib != eb) {
    std::int32_t va = (ia != ea) ? ia->var : 0;
    std::int32_t vb = (ib != eb) ? ib->var : 0;
    if (va > vb) {
      // a has the higher variable with positive exponent, b has zero there
      return std::strong_ordering::less;
    }
    if (vb > va) {
      return std::strong_ordering::greater;
    }
    if (ia->exp != ib->exp) {
      return ia->exp < ib->exp ? std::strong_ordering::greater
                               : std::strong_ordering::less;
    }
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    std::int32_t va = (ia != ea) ? ia->var : std::numeric_limits<std::int32_t>::max();
    std::int32_t vb = (ib != eb) ? ib->var : std::numeric_limits<std::int32_t>::max();
    if (va < vb) return std::strong_ordering::greater;
    if (vb < va) return std::strong_ordering::less;
    if (ia->exp != ib->exp) return ia->exp <=> ib->exp;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             OrderKind kind) {
  return kind == OrderKind::degrevlex ? compare_degrevlex(a, b)
                                      : compare_lex(a, b);
}

}  // namespace arapath
