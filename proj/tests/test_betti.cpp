#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "arapath/betti.hpp"
#include "arapath/path.hpp"
#include "arapath/simplicial.hpp"
#include "test_util.hpp"

using namespace arapath;
using testutil::I;
using testutil::M;

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("Stanley-Reisner restrictions") {
  Ring ring(3);
  SUBCASE("one edge removed") {
    MonomialIdeal m = I(ring, "x1*x2");
    std::vector<std::int32_t> sigma = {1, 2};
    SimplicialComplex k = stanley_reisner_restriction(m, sigma);
    CHECK(k.faces == std::vector<std::uint32_t>{0b00, 0b01, 0b10});
  }
  SUBCASE("triangle boundary minus all edges leaves vertices") {
    MonomialIdeal m = I(ring, "x1*x2; x2*x3; x3*x1");
    std::vector<std::int32_t> sigma = {1, 2, 3};
    SimplicialComplex k = stanley_reisner_restriction(m, sigma);
    CHECK(k.faces == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b100});
    auto facets = k.facets();
    CHECK(facets.size() == 3);  // the three vertices
  }
  SUBCASE("empty sigma gives the complex {emptyset}") {
    MonomialIdeal m = I(ring, "x1*x2");
    SimplicialComplex k = stanley_reisner_restriction(m, {});
    CHECK(k.faces == std::vector<std::uint32_t>{0});
  }
  SUBCASE("non-square-free rejected") {
    std::vector<std::int32_t> sigma = {1};
    CHECK_THROWS_AS(stanley_reisner_restriction(I(ring, "x1^2"), sigma),
                    DomainError);
  }
}

TEST_CASE("reduced homology over GF(p)") {
  SUBCASE("two isolated vertices: one component gap") {
    SimplicialComplex k{{1, 2}, {0b00, 0b01, 0b10}};
    auto ranks = reduced_homology_ranks(k, 2);
    CHECK(ranks[0] == 0);  // H~_{-1}
    CHECK(ranks[1] == 1);  // H~_0
  }
  SUBCASE("hollow triangle: a circle") {
    SimplicialComplex k{{1, 2, 3},
                        {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110}};
    auto ranks = reduced_homology_ranks(k, 32003);
    CHECK(ranks[1] == 0);
    CHECK(ranks[2] == 1);  // H~_1
  }
  SUBCASE("full simplex: contractible") {
    std::vector<std::uint32_t> faces(8);
    std::iota(faces.begin(), faces.end(), 0);
    SimplicialComplex k{{1, 2, 3}, faces};
    auto ranks = reduced_homology_ranks(k, 7);
    for (auto r : ranks) CHECK(r == 0);
  }
  SUBCASE("only the empty face") {
    SimplicialComplex k{{}, {0}};
    auto ranks = reduced_homology_ranks(k, 2);
    CHECK(ranks[0] == 1);
  }
  SUBCASE("void complex") {
    SimplicialComplex k{{}, {}};
    CHECK(reduced_homology_ranks(k, 2).empty());
  }
  SUBCASE("face lists must be downward closed") {
    SimplicialComplex k{{1, 2}, {0b00, 0b11}};  // edge without its vertices
    CHECK_THROWS_AS(reduced_homology_ranks(k, 2), DomainError);
  }
  SUBCASE("composite modulus rejected") {
    SimplicialComplex k{{1}, {0b0, 0b1}};
    CHECK_THROWS_AS(reduced_homology_ranks(k, 6), DomainError);
  }
}

TEST_CASE("betti tables and projective dimension: frozen values") {
  // Koszul: pd(R/(x1..xn)) = n with beta_i = C(n, i)
  for (int n = 1; n <= 5; ++n) {
    Ring ring(n);
    std::vector<Monomial> vars;
    for (int v = 1; v <= n; ++v) vars.push_back(Monomial::variable(v));
    MonomialIdeal m(ring, vars);
    BettiTable table = betti_table(m, 32003);
    CHECK(table.projective_dimension() == n);
    for (int i = 0; i <= n; ++i) CHECK(table.total(i) == binomial(n, i));
  }

  Ring r2(2);
  CHECK(projective_dimension(I(r2, "x1*x2"), 2) == 1);

  // I_2(L_4): closed formula gives 2(4-1)/3 = 2
  CHECK(projective_dimension(path_ideal(4, 2), 2) == 2);
  CHECK(projective_dimension(path_ideal(4, 2), 32003) == 2);

  // split-variable ideal: two disjoint pieces add up, 2 + 1 = 3
  Ring r5(5);
  CHECK(projective_dimension(I(r5, "x1*x2; x1*x3"), 32003) == 2);
  CHECK(projective_dimension(I(r5, "x4*x5"), 32003) == 1);
  CHECK(projective_dimension(I(r5, "x1*x2; x1*x3; x4*x5"), 32003) == 3);

  // known grid values from the closed formula
  CHECK(projective_dimension(path_ideal(5, 2), 32003) == 3);   // (2*5-1)/3
  CHECK(projective_dimension(path_ideal(7, 3), 32003) == 3);   // (14-2)/4
  for (int n = 1; n <= 6; ++n) {
    CHECK(projective_dimension(path_ideal(n, 1), 2) == n);
  }
}

TEST_CASE("betti table errors") {
  Ring ring(3);
  CHECK_THROWS_AS(betti_table(I(ring, "x1^2"), 2), DomainError);
  Ring wide(18);
  std::vector<Monomial> vars;
  for (int v = 1; v <= 18; ++v) vars.push_back(Monomial::variable(v));
  CHECK_THROWS_AS(betti_table(MonomialIdeal(wide, vars), 2), BudgetExceeded);
  // raising the cap admits the instance
  CHECK(projective_dimension(MonomialIdeal(wide, vars), 2, 18) == 18);
  // zero ideal: R/0 = R is free, so pd = 0 and only the rank-of-R entry
  BettiTable trivial = betti_table(MonomialIdeal::zero(ring), 2);
  CHECK(trivial.projective_dimension() == 0);
  CHECK(trivial.entries.size() == 1);
}

TEST_CASE("property: Taylor bound pd <= number of generators") {
  testutil::Rand rnd(60221023);
  int done = 0;
  while (done < 100) {
    Ring ring(rnd.uniform(2, 6));
    MonomialIdeal m = rnd.squarefree_ideal(ring, 5);
    if (m.is_unit()) continue;
    BettiTable table = betti_table(m, 32003);
    auto g = static_cast<std::int64_t>(m.generators().size());
    CHECK(table.projective_dimension() <= g);
    // stronger Taylor bound per homological degree
    for (std::int32_t i = 1; i <= table.projective_dimension(); ++i) {
      CHECK(table.total(i) <= binomial(g, i));
    }
    ++done;
  }
}

TEST_CASE("property: disjoint-variable ideals add projective dimensions") {
  testutil::Rand rnd(271828);
  for (int round = 0; round < 40; ++round) {
    std::int32_t n1 = rnd.uniform(2, 3), n2 = rnd.uniform(2, 3);
    Ring left(n1), whole(n1 + n2);
    MonomialIdeal a = rnd.squarefree_ideal(left, 2);
    if (a.is_unit() || a.is_zero()) continue;
    // shift a second ideal into fresh variables
    MonomialIdeal b_raw = rnd.squarefree_ideal(Ring(n2), 2);
    if (b_raw.is_unit() || b_raw.is_zero()) continue;
    std::vector<Monomial> shifted;
    for (const auto& g : b_raw.generators()) {
      shifted.push_back(g.remapped([n1](std::int32_t v) { return v + n1; }));
    }
    MonomialIdeal b(whole, shifted);
    MonomialIdeal sum = ideal_sum(MonomialIdeal(whole, a.generators()), b);
    CHECK(projective_dimension(sum, 32003) ==
          projective_dimension(a, 32003) + projective_dimension(b, 32003));
  }
}

TEST_CASE("property: pd invariant under index reversal") {
  testutil::Rand rnd(314159);
  int done = 0;
  while (done < 100) {
    Ring ring(rnd.uniform(2, 6));
    MonomialIdeal m = rnd.squarefree_ideal(ring, 4);
    if (m.is_unit() || m.is_zero()) continue;
    CHECK(projective_dimension(m, 32003) ==
          projective_dimension(reverse_variables(m), 32003));
    ++done;
  }
}

TEST_CASE("projective plane: ranks depend on the characteristic") {
  // minimal 6-vertex triangulation; 15 edges, 10 triangles, Euler char 1
  const std::vector<std::array<int, 3>> triangles = {
      {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
      {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
  std::vector<std::uint32_t> faces;
  for (const auto& tri : triangles) {
    std::uint32_t m = 0;
    for (int v : tri) m |= 1u << (v - 1);
    // all subsets of the facet
    for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
      faces.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  REQUIRE(faces.size() == 1 + 6 + 15 + 10);
  SimplicialComplex k{{1, 2, 3, 4, 5, 6}, faces};

  auto mod2 = reduced_homology_ranks(k, 2);
  CHECK(mod2[1] == 0);  // H~_0
  CHECK(mod2[2] == 1);  // H~_1: the 2-torsion class survives mod 2
  CHECK(mod2[3] == 1);  // H~_2

  for (std::uint32_t p : {7u, 32003u}) {
    auto modp = reduced_homology_ranks(k, p);
    CHECK(modp[1] == 0);
    CHECK(modp[2] == 0);
    CHECK(modp[3] == 0);
  }
}

TEST_CASE("property: Euler characteristic matches homology ranks") {
  testutil::Rand rnd(987654);
  for (int round = 0; round < 60; ++round) {
    Ring ring(rnd.uniform(2, 5));
    MonomialIdeal m = rnd.squarefree_ideal(ring, 4);
    if (m.is_unit()) continue;
    std::vector<std::int32_t> sigma;
    for (std::int32_t v = 1; v <= ring.nvars(); ++v) {
      if (rnd.uniform(0, 1)) sigma.push_back(v);
    }
    SimplicialComplex k = stanley_reisner_restriction(m, sigma);
    for (std::uint32_t p : {2u, 32003u}) {
      auto ranks = reduced_homology_ranks(k, p);
      std::int64_t chi_faces = 0, chi_ranks = 0;
      for (std::uint32_t f : k.faces) {
        chi_faces += (std::popcount(f) % 2 == 0) ? 1 : -1;
      }
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        chi_ranks += (i % 2 == 0) ? ranks[i] : -ranks[i];
      }
      CHECK(chi_faces == chi_ranks);
    }
  }
}

TEST_CASE("property: optimized table equals naive per-subset Hochster") {
  testutil::Rand rnd(192837);
  int done = 0;
  while (done < 40) {
    Ring ring(rnd.uniform(2, 5));
    MonomialIdeal m = rnd.squarefree_ideal(ring, 4);
    if (m.is_unit() || m.is_zero()) continue;
    for (std::uint32_t p : {2u, 32003u}) {
      BettiTable table = betti_table(m, p);
      const auto& vars = table.variables;
      std::map<std::pair<std::int32_t, std::uint32_t>, std::int64_t> naive;
      for (std::uint32_t sigma = 0; sigma < (1u << vars.size()); ++sigma) {
        std::vector<std::int32_t> subset;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (sigma & (1u << i)) subset.push_back(vars[i]);
        }
        SimplicialComplex k = stanley_reisner_restriction(m, subset);
        auto ranks = reduced_homology_ranks(k, p);
        const std::int32_t s = static_cast<std::int32_t>(subset.size());
        for (std::size_t kk = 0; kk < ranks.size(); ++kk) {
          if (ranks[kk] != 0) {
            naive[{s - static_cast<std::int32_t>(kk), sigma}] = ranks[kk];
          }
        }
      }
      CHECK(naive == table.entries);
    }
    ++done;
  }
}

TEST_CASE("sparse rank fallback agrees with naive elimination") {
  testutil::Rand rnd(55555);
  const std::uint32_t p = 32003;
  PrimeField F(p);
  for (int round = 0; round < 60; ++round) {
    std::int32_t nrows = rnd.uniform(1, 10), ncols = rnd.uniform(1, 10);
    std::vector<std::vector<std::uint32_t>> dense(
        ncols, std::vector<std::uint32_t>(nrows, 0));
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> sparse(
        ncols);
    for (std::int32_t cidx = 0; cidx < ncols; ++cidx) {
      for (std::int32_t r = 0; r < nrows; ++r) {
        if (rnd.uniform(0, 2) == 0) {
          std::uint32_t v = static_cast<std::uint32_t>(rnd.uniform(1, 100));
          dense[cidx][r] = v;
          sparse[cidx].push_back({r, v});
        }
      }
    }
    // naive textbook row echelon over GF(p)
    std::vector<std::vector<std::uint32_t>> mat(
        nrows, std::vector<std::uint32_t>(ncols, 0));
    for (std::int32_t cidx = 0; cidx < ncols; ++cidx) {
      for (std::int32_t r = 0; r < nrows; ++r) mat[r][cidx] = dense[cidx][r];
    }
    std::int64_t naive_rank = 0;
    std::int32_t row = 0;
    for (std::int32_t col = 0; col < ncols && row < nrows; ++col) {
      std::int32_t pivot = -1;
      for (std::int32_t r = row; r < nrows; ++r) {
        if (mat[r][col] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(mat[row], mat[pivot]);
      std::uint32_t inv = F.inv(mat[row][col]);
      for (std::int32_t cc = col; cc < ncols; ++cc) {
        mat[row][cc] = F.mul(mat[row][cc], inv);
      }
      for (std::int32_t r = 0; r < nrows; ++r) {
        if (r == row || mat[r][col] == 0) continue;
        std::uint32_t factor = mat[r][col];
        for (std::int32_t cc = col; cc < ncols; ++cc) {
          mat[r][cc] = F.sub(mat[r][cc], F.mul(factor, mat[row][cc]));
        }
      }
      ++naive_rank;
      ++row;
    }
    CHECK(detail::sparse_rank_mod_p(sparse, nrows, p) == naive_rank);
  }
}

TEST_CASE("grid: characteristic 2 and 32003 agree on path ideals") {
  for (std::int32_t t = 1; t <= 5; ++t) {
    for (std::int32_t n = t; n <= 14; ++n) {
      MonomialIdeal m = path_ideal(n, t);
      CHECK(projective_dimension(m, 2) == projective_dimension(m, 32003));
    }
  }
}
