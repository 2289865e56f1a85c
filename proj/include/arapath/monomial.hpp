#ifndef ARAPATH_MONOMIAL_HPP
#define ARAPATH_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "arapath/errors.hpp"

namespace arapath {

/// Sparse exponent vector over 1-based variable indices. No stored
/// exponent is zero; the empty vector is the unit monomial.
class Monomial {
public:
  struct VarExp {
    std::int32_t var;  // 1-based
    std::int32_t exp;  // >= 1
    friend bool operator==(const VarExp&, const VarExp&) = default;
  };

  Monomial() = default;

  static Monomial variable(std::int32_t var, std::int32_t exp = 1);
  /// Builds from arbitrary (var, exp) pairs: merges repeats, drops zero
  /// exponents, checks for overflow and nonpositive input.
  static Monomial from_pairs(std::vector<VarExp> pairs);

  bool is_unit() const { return factors_.empty(); }
  std::int64_t degree() const;
  std::int32_t exponent(std::int32_t var) const;
  std::int32_t max_var() const { return factors_.empty() ? 0 : factors_.back().var; }
  std::size_t support_size() const { return factors_.size(); }
  bool is_squarefree() const;
  const std::vector<VarExp>& factors() const { return factors_; }

  /// Applies `fn : var -> var` to every variable index and rebuilds.
  template <typename Fn>
  Monomial remapped(Fn&& fn) const {
    std::vector<VarExp> out;
    out.reserve(factors_.size());
    for (const auto& [v, e] : factors_) out.push_back({fn(v), e});
    return from_pairs(std::move(out));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<VarExp> factors_;  // ascending var
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Does a divide b?
bool divides(const Monomial& a, const Monomial& b);
/// b / a; throws DomainError when a does not divide b.
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace arapath

#endif
