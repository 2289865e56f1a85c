#ifndef ARAPATH_MONOMIAL_IDEAL_HPP
#define ARAPATH_MONOMIAL_IDEAL_HPP

#include <vector>

#include "arapath/polynomial.hpp"

namespace arapath {

/// Monomial ideal held by its unique minimal generating set: no generator
/// divides another, deduplicated, sorted ascending in the ring's order.
/// The zero ideal has no generators.
class MonomialIdeal {
public:
  explicit MonomialIdeal(const Ring& ring) : ring_(ring) {}
  /// Minimalizes the given generators.
  MonomialIdeal(const Ring& ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring); }

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;
  bool is_unit() const {
    return gens_.size() == 1 && gens_.front().is_unit();
  }

  /// Membership of a monomial: divisibility by some generator.
  bool contains(const Monomial& m) const;
  /// Membership of a polynomial: every term's monomial is contained.
  /// No Groebner computation involved.
  bool contains(const Polynomial& f) const;

  std::vector<Polynomial> generator_polynomials() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> monomials);

/// Minimalized union of generators. The operands may differ in variable
/// count (same characteristic and order); the result lives in the wider
/// ring.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// x_i -> x_{N+1-i}.
MonomialIdeal reverse_variables(const MonomialIdeal& m);

}  // namespace arapath

#endif
