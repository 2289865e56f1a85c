#ifndef ARAPATH_SIMPLICIAL_HPP
#define ARAPATH_SIMPLICIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "arapath/monomial_ideal.hpp"

namespace arapath {

/// Finite simplicial complex on at most 32 vertices. Faces are bitmasks
/// over positions into `vertices` (which carries the original 1-based
/// labels). An empty `faces` list is the void complex; {0} is the complex
/// whose only face is the empty set.
struct SimplicialComplex {
  std::vector<std::int32_t> vertices;    // sorted original labels
  std::vector<std::uint32_t> faces;      // sorted ascending as integers

  bool is_void() const { return faces.empty(); }
  /// Maximal faces, no facet contains another.
  std::vector<std::uint32_t> facets() const;
  std::vector<std::vector<std::int32_t>> facet_labels() const;
};

/// Restriction of the Stanley-Reisner complex of a square-free monomial
/// ideal to the vertex subset sigma: faces are exactly the F subseteq
/// sigma such that no generator of M has support inside F.
SimplicialComplex stanley_reisner_restriction(const MonomialIdeal& M,
                                              std::span<const std::int32_t> sigma);

/// Ranks of reduced simplicial homology over GF(p), returned with index
/// i holding the rank of H~_{i-1}; entry 0 is H~_{-1}. The void complex
/// yields an empty vector.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                 std::uint32_t p);

namespace detail {

/// Same as reduced_homology_ranks but straight from a face list
/// (bitmasks over `nverts` positions, downward closed, sorted).
std::vector<std::int64_t> homology_ranks_from_faces(
    const std::vector<std::uint32_t>& faces, std::int32_t nverts,
    std::uint32_t p);

/// Rank of a sparse matrix over GF(p); columns given as (row, coeff)
/// entries sorted by row.
std::int64_t sparse_rank_mod_p(
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> columns,
    std::int32_t nrows, std::uint32_t p);

}  // namespace detail

}  // namespace arapath

#endif
