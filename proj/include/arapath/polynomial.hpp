#ifndef ARAPATH_POLYNOMIAL_HPP
#define ARAPATH_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "arapath/ring.hpp"

namespace arapath {

/// Canonical sparse polynomial over GF(p): nonzero coefficients in [1, p),
/// monomials strictly descending in the ring's order. The zero polynomial
/// has an empty term list.
class Polynomial {
public:
  struct Term {
    std::uint32_t coeff;  // in [1, p)
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  struct RawTerm {
    std::int64_t coeff;  // reduced mod p on normalization
    Monomial mono;
  };

  explicit Polynomial(const Ring& ring) : ring_(ring) {}

  static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial monomial(const Ring& ring, const Monomial& m,
                             std::int64_t c = 1);
  static Polynomial from_terms(const Ring& ring, std::vector<RawTerm> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
  }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::uint32_t leading_coeff() const { return leading_term().coeff; }
  /// Total degree of the highest-degree term; -1 for the zero polynomial.
  std::int64_t degree() const;

  /// Everything but the leading term.
  Polynomial tail() const;

  Polynomial scaled(std::uint32_t c) const;
  /// c * m * this, exploiting that monomial orders are multiplicative
  /// (no re-sort needed).
  Polynomial monomial_mul(std::uint32_t c, const Monomial& m) const;
  Polynomial monic() const;

  std::uint32_t eval(std::span<const std::uint32_t> point) const;

  /// Applies `fn : var -> var` to every variable and renormalizes into
  /// `target` (used for ring extension, block shifting, index reversal).
  template <typename Fn>
  Polynomial remapped(const Ring& target, Fn&& fn) const {
    std::vector<RawTerm> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
      raw.push_back({static_cast<std::int64_t>(t.coeff), t.mono.remapped(fn)});
    }
    return from_terms(target, std::move(raw));
  }
  Polynomial lifted(const Ring& target) const {
    return remapped(target, [](std::int32_t v) { return v; });
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
  Ring ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// x_i -> x_{N+1-i} over the polynomial's own ring.
Polynomial reverse_variables(const Polynomial& f);

}  // namespace arapath

#endif
