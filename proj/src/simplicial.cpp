#include "arapath/simplicial.hpp"

#include <algorithm>
#include <bit>

namespace arapath {

std::vector<std::uint32_t> SimplicialComplex::facets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : faces) {
    bool maximal = true;
    for (std::uint32_t g : faces) {
      if (g != f && (f & g) == f) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<std::int32_t>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::int32_t>> out;
  for (std::uint32_t f : facets()) {
    std::vector<std::int32_t> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (f & (1u << i)) labels.push_back(vertices[i]);
    }
    out.push_back(std::move(labels));
  }
  return out;
}

SimplicialComplex stanley_reisner_restriction(const MonomialIdeal& M,
                                              std::span<const std::int32_t> sigma) {
  if (!M.is_squarefree()) {
    throw DomainError("Stanley-Reisner restriction needs a square-free ideal");
  }
  std::vector<std::int32_t> verts(sigma.begin(), sigma.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::int32_t v : verts) {
    if (v < 1 || v > M.ring().nvars()) {
      throw DomainError("restriction vertex outside the ring");
    }
  }
  if (verts.size() > 24) {
    throw BudgetExceeded("variable-cap", "restriction to more than 24 vertices");
  }
  const std::int32_t s = static_cast<std::int32_t>(verts.size());

  auto position = [&](std::int32_t v) -> std::int32_t {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return (it != verts.end() && *it == v)
               ? static_cast<std::int32_t>(it - verts.begin())
               : -1;
  };

  // generator supports fully inside sigma, as position masks
  std::vector<std::uint32_t> gmasks;
  bool has_unit_gen = false;
  for (const auto& g : M.generators()) {
    std::uint32_t mask = 0;
    bool inside = true;
    for (const auto& [v, e] : g.factors()) {
      std::int32_t pos = position(v);
      if (pos < 0) {
        inside = false;
        break;
      }
      mask |= 1u << pos;
    }
    if (inside) {
      gmasks.push_back(mask);
      if (mask == 0) has_unit_gen = true;
    }
  }

  SimplicialComplex K;
  K.vertices = std::move(verts);
  if (has_unit_gen) return K;  // void complex

  const std::uint32_t limit = 1u << s;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool face = true;
    for (std::uint32_t g : gmasks) {
      if ((mask & g) == g) {
        face = false;
        break;
      }
    }
    if (face) K.faces.push_back(mask);
  }
  return K;
}

namespace detail {

namespace {

/// Column reduction over GF(2) with bit-packed columns. Pivot row of a
/// stored column is its lowest set bit; reduction strictly increases the
/// lowest set bit of the work column, so the loop terminates.
std::int64_t rank_mod_2(std::vector<std::vector<std::uint64_t>> columns,
                        std::int32_t nrows) {
  const std::size_t nwords = (static_cast<std::size_t>(nrows) + 63) / 64;
  std::vector<std::int32_t> pivot_of_row(static_cast<std::size_t>(nrows), -1);
  std::vector<std::vector<std::uint64_t>> pivots;
  std::int64_t rank = 0;

  for (auto& col : columns) {
    std::size_t word = 0;
    for (;;) {
      while (word < nwords && col[word] == 0) ++word;
      if (word == nwords) break;  // column eliminated
      std::int32_t row = static_cast<std::int32_t>(
          word * 64 + static_cast<std::size_t>(std::countr_zero(col[word])));
      std::int32_t p = pivot_of_row[static_cast<std::size_t>(row)];
      if (p < 0) {
        pivot_of_row[static_cast<std::size_t>(row)] =
            static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(col));
        ++rank;
        break;
      }
      const auto& piv = pivots[static_cast<std::size_t>(p)];
      for (std::size_t w = word; w < nwords; ++w) col[w] ^= piv[w];
    }
  }
  return rank;
}

/// Dense column reduction over GF(p) for p < 2^15, Barrett-style modular
/// reduction in the inner loop.
std::int64_t rank_mod_p_dense(std::vector<std::vector<std::uint32_t>> columns,
                              std::int32_t nrows, std::uint32_t p) {
  const PrimeField F(p);
  const std::uint64_t magic = (std::uint64_t(1) << 32) / p;
  auto reduce = [p, magic](std::uint32_t x) -> std::uint32_t {
    std::uint32_t q = static_cast<std::uint32_t>((std::uint64_t(x) * magic) >> 32);
    std::uint32_t r = x - q * p;
    if (r >= p) r -= p;
    if (r >= p) r -= p;
    return r;
  };

  std::vector<std::int32_t> pivot_of_row(static_cast<std::size_t>(nrows), -1);
  std::vector<std::vector<std::uint32_t>> pivots;
  std::int64_t rank = 0;

  for (auto& col : columns) {
    std::int32_t row = 0;
    for (;;) {
      while (row < nrows && col[static_cast<std::size_t>(row)] == 0) ++row;
      if (row == nrows) break;
      std::int32_t piv_idx = pivot_of_row[static_cast<std::size_t>(row)];
      if (piv_idx < 0) {
        // normalize so the pivot entry is 1
        std::uint32_t inv = F.inv(col[static_cast<std::size_t>(row)]);
        for (std::int32_t j = row; j < nrows; ++j) {
          col[static_cast<std::size_t>(j)] =
              F.mul(col[static_cast<std::size_t>(j)], inv);
        }
        pivot_of_row[static_cast<std::size_t>(row)] =
            static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(col));
        ++rank;
        break;
      }
      const auto& piv = pivots[static_cast<std::size_t>(piv_idx)];
      const std::uint32_t c = p - col[static_cast<std::size_t>(row)];  // subtract c * piv
      const std::uint32_t* pv = piv.data();
      std::uint32_t* cv = col.data();
      for (std::int32_t j = row; j < nrows; ++j) {
        cv[j] = reduce(cv[j] + c * pv[j]);
      }
    }
  }
  return rank;
}

}  // namespace

std::int64_t sparse_rank_mod_p(
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> columns,
    std::int32_t nrows, std::uint32_t p) {
  const PrimeField F(p);
  std::vector<std::int32_t> pivot_of_row(static_cast<std::size_t>(nrows), -1);
  std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> pivots;
  std::int64_t rank = 0;
  std::vector<std::pair<std::int32_t, std::uint32_t>> merged;

  for (auto& col : columns) {
    for (;;) {
      if (col.empty()) break;
      std::int32_t row = col.front().first;
      std::int32_t piv_idx = pivot_of_row[static_cast<std::size_t>(row)];
      if (piv_idx < 0) {
        std::uint32_t inv = F.inv(col.front().second);
        for (auto& e : col) e.second = F.mul(e.second, inv);
        pivot_of_row[static_cast<std::size_t>(row)] =
            static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(col));
        ++rank;
        break;
      }
      const auto& piv = pivots[static_cast<std::size_t>(piv_idx)];
      const std::uint32_t c = F.neg(col.front().second);
      merged.clear();
      merged.reserve(col.size() + piv.size());
      auto ia = col.begin(), ea = col.end();
      auto ib = piv.begin(), eb = piv.end();
      while (ia != ea && ib != eb) {
        if (ia->first < ib->first) {
          merged.push_back(*ia++);
        } else if (ib->first < ia->first) {
          merged.push_back({ib->first, F.mul(c, ib->second)});
          ++ib;
        } else {
          std::uint32_t v = F.add(ia->second, F.mul(c, ib->second));
          if (v != 0) merged.push_back({ia->first, v});
          ++ia;
          ++ib;
        }
      }
      merged.insert(merged.end(), ia, ea);
      for (; ib != eb; ++ib) merged.push_back({ib->first, F.mul(c, ib->second)});
      col.swap(merged);
    }
  }
  return rank;
}

namespace {

std::int64_t boundary_rank(
    const std::vector<std::uint32_t>& upper,  // faces with j elements
    const std::vector<std::uint32_t>& lower,  // faces with j-1 elements
    std::uint32_t p) {
  if (upper.empty()) return 0;
  if (lower.empty()) throw DomainError("face list is not downward closed");
  const std::int32_t nrows = static_cast<std::int32_t>(lower.size());
  const std::int32_t ncols = static_cast<std::int32_t>(upper.size());

  auto row_of = [&](std::uint32_t mask) -> std::int32_t {
    auto it = std::lower_bound(lower.begin(), lower.end(), mask);
    if (it == lower.end() || *it != mask) {
      throw DomainError("face list is not downward closed");
    }
    return static_cast<std::int32_t>(it - lower.begin());
  };

  // Column entries arrive with descending row masks (dropping a lower bit
  // leaves a larger remainder), so reversing sorts them ascending.
  auto column_entries = [&](std::uint32_t face) {
    std::vector<std::pair<std::int32_t, std::uint32_t>> entries;
    std::uint32_t rest = face;
    std::int32_t sign_index = 0;
    while (rest != 0) {
      std::uint32_t bit = rest & (~rest + 1);
      std::uint32_t sub = face ^ bit;
      entries.push_back({row_of(sub), sign_index % 2 == 0 ? 1u : p - 1});
      rest ^= bit;
      ++sign_index;
    }
    std::reverse(entries.begin(), entries.end());
    return entries;
  };

  if (p == 2) {
    const std::size_t nwords = (static_cast<std::size_t>(nrows) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> columns;
    columns.reserve(static_cast<std::size_t>(ncols));
    for (std::uint32_t face : upper) {
      std::vector<std::uint64_t> col(nwords, 0);
      for (const auto& [row, coeff] : column_entries(face)) {
        col[static_cast<std::size_t>(row) / 64] ^=
            std::uint64_t(1) << (static_cast<std::size_t>(row) % 64);
      }
      columns.push_back(std::move(col));
    }
    return rank_mod_2(std::move(columns), nrows);
  }

  const std::uint64_t dense_bytes = std::uint64_t(nrows) * 4 *
                                    std::uint64_t(std::min(nrows, ncols) + 1);
  if (p < (1u << 15) && dense_bytes <= (std::uint64_t(192) << 20)) {
    std::vector<std::vector<std::uint32_t>> columns;
    columns.reserve(static_cast<std::size_t>(ncols));
    for (std::uint32_t face : upper) {
      std::vector<std::uint32_t> col(static_cast<std::size_t>(nrows), 0);
      for (const auto& [row, coeff] : column_entries(face)) {
        col[static_cast<std::size_t>(row)] = coeff;
      }
      columns.push_back(std::move(col));
    }
    return rank_mod_p_dense(std::move(columns), nrows, p);
  }

  std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> columns;
  columns.reserve(static_cast<std::size_t>(ncols));
  for (std::uint32_t face : upper) columns.push_back(column_entries(face));
  return sparse_rank_mod_p(std::move(columns), nrows, p);
}

}  // namespace

std::vector<std::int64_t> homology_ranks_from_faces(
    const std::vector<std::uint32_t>& faces, std::int32_t nverts,
    std::uint32_t p) {
  if (faces.empty()) return {};  // void complex: nothing in any degree

  std::vector<std::vector<std::uint32_t>> levels(
      static_cast<std::size_t>(nverts) + 1);
  for (std::uint32_t f : faces) {
    levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  }
  // faces sorted globally implies each level sorted

  std::vector<std::int64_t> bd_rank(static_cast<std::size_t>(nverts) + 2, 0);
  for (std::size_t j = 1; j < levels.size(); ++j) {
    if (!levels[j].empty()) {
      bd_rank[j] = boundary_rank(levels[j], levels[j - 1], p);
    }
  }

  std::vector<std::int64_t> ranks(static_cast<std::size_t>(nverts) + 1, 0);
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    ranks[k] = static_cast<std::int64_t>(levels[k].size()) - bd_rank[k] -
               bd_rank[k + 1];
  }
  return ranks;
}

}  // namespace detail

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                 std::uint32_t p) {
  PrimeField check(p);  // validates primality
  std::vector<std::uint32_t> faces = K.faces;
  std::sort(faces.begin(), faces.end());
  return detail::homology_ranks_from_faces(
      faces, static_cast<std::int32_t>(K.vertices.size()), p);
}

}  // namespace arapath
