#ifndef ARAPATH_GROEBNER_HPP
#define ARAPATH_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "arapath/polynomial.hpp"

namespace arapath {

/// Caps on a single Buchberger run. Exceeding one aborts with
/// BudgetExceeded; nothing is ever truncated silently.
struct GroebnerBudgets {
  std::size_t max_pair_reductions = 50'000;
  std::int64_t max_degree = 60;
};

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> polys;  // monic; sorted ascending by leading monomial
  bool reduced = false;

  bool is_unit_ideal() const;
};

/// S(f, g) = (lcm/lt f) f - (lcm/lt g) g with both sides made monic first,
/// so the leading terms cancel exactly.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full remainder of multivariate division: no term of the result is
/// divisible by any leading monomial of `basis`, and f - result lies in
/// the ideal generated by `basis`. For a non-Groebner basis the result
/// depends on the order of `basis` but is still a valid remainder.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Buchberger's algorithm with the Gebauer-Moeller pair update (product
/// and chain criteria) and normal selection strategy: minimal lcm degree
/// first, ties broken by lex comparison of the lcm, then generator
/// indices. The returned basis is the unique reduced Groebner basis.
GroebnerBasis buchberger(std::vector<Polynomial> generators,
                         const GroebnerBudgets& budgets = {});

/// Exhaustive check that every S-polynomial of `polys` reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> polys);

bool ideal_contains(const Polynomial& f, const std::vector<Polynomial>& generators,
                    const GroebnerBudgets& budgets = {});

}  // namespace arapath

#endif
