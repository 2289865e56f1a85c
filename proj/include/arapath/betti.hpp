#ifndef ARAPATH_BETTI_HPP
#define ARAPATH_BETTI_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "arapath/monomial_ideal.hpp"

namespace arapath {

inline constexpr std::int32_t kDefaultBettiVarCap = 16;

/// Multigraded Betti numbers of R/I for a square-free monomial ideal I,
/// computed over GF(p). Multidegrees are recorded as bitmasks over
/// `variables` (the variables appearing in I, ascending); only nonzero
/// entries are stored. The (0, emptyset) entry is the rank of R itself
/// and does not count towards the projective dimension.
struct BettiTable {
  std::uint32_t characteristic = 0;
  std::vector<std::int32_t> variables;
  std::map<std::pair<std::int32_t, std::uint32_t>, std::int64_t> entries;

  std::int32_t projective_dimension() const;
  /// Sum of beta_{i, sigma} over all sigma.
  std::int64_t total(std::int32_t i) const;
  std::vector<std::int32_t> multidegree_labels(std::uint32_t mask) const;
};

/// Hochster's formula: beta_{i,sigma}(R/I) equals the rank of reduced
/// homology H~_{|sigma|-i-1} of the Stanley-Reisner complex of I
/// restricted to sigma, over GF(p). Enumerates sigma over subsets of the
/// variables appearing in I (entries vanish elsewhere); throws
/// BudgetExceeded when that support exceeds `var_cap`.
BettiTable betti_table(const MonomialIdeal& M, std::uint32_t p,
                       std::int32_t var_cap = kDefaultBettiVarCap);

/// pd(R/I): the largest homological degree with a nonzero Betti number.
std::int32_t projective_dimension(const MonomialIdeal& M, std::uint32_t p,
                                  std::int32_t var_cap = kDefaultBettiVarCap);

}  // namespace arapath

#endif
