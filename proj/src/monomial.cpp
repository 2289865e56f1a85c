#include "arapath/monomial.hpp"

#include <algorithm>
#include <limits>

namespace arapath {

namespace {

std::int32_t checked_exp_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = static_cast<std::int64_t>(a) + b;
  if (s > std::numeric_limits<std::int32_t>::max()) {
    throw DomainError("exponent overflow in monomial arithmetic");
  }
  return static_cast<std::int32_t>(s);
}

}  // namespace

Monomial Monomial::variable(std::int32_t var, std::int32_t exp) {
  return from_pairs({{var, exp}});
}

Monomial Monomial::from_pairs(std::vector<VarExp> pairs) {
  for (const auto& [v, e] : pairs) {
    if (v < 1) throw DomainError("variable index must be >= 1");
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const VarExp& a, const VarExp& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& [v, e] : pairs) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == v) {
      m.factors_.back().exp = checked_exp_add(m.factors_.back().exp, e);
    } else {
      m.factors_.push_back({v, e});
    }
  }
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::int32_t Monomial::exponent(std::int32_t var) const {
  for (const auto& f : factors_) {
    if (f.var == var) return f.exp;
    if (f.var > var) break;
  }
  return 0;
}

bool Monomial::is_squarefree() const {
  for (const auto& f : factors_) {
    if (f.exp > 1) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::VarExp> out;
  out.reserve(a.factors().size() + b.factors().size());
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->var < ib->var) {
      out.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->var, checked_exp_add(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  return Monomial::from_pairs(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  auto ib = b.factors().begin(), eb = b.factors().end();
  for (const auto& fa : a.factors()) {
    while (ib != eb && ib->var < fa.var) ++ib;
    if (ib == eb || ib->var != fa.var || ib->exp < fa.exp) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw DomainError("monomial quotient is not exact");
  std::vector<Monomial::VarExp> out;
  auto ia = a.factors().begin(), ea = a.factors().end();
  for (const auto& fb : b.factors()) {
    std::int32_t e = fb.exp;
    if (ia != ea && ia->var == fb.var) {
      e -= ia->exp;
      ++ia;
    }
    if (e > 0) out.push_back({fb.var, e});
  }
  return Monomial::from_pairs(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::VarExp> out;
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->var < ib->var) {
      out.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->var, std::max(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  return Monomial::from_pairs(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::VarExp> out;
  auto ib = b.factors().begin(), eb = b.factors().end();
  for (const auto& fa : a.factors()) {
    while (ib != eb && ib->var < fa.var) ++ib;
    if (ib != eb && ib->var == fa.var) {
      out.push_back({fa.var, std::min(fa.exp, ib->exp)});
    }
  }
  return Monomial::from_pairs(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
  return gcd(a, b).is_unit();
}

}  // namespace arapath
