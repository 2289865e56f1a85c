#include "arapath/groebner.hpp"

#include <algorithm>
#include <list>

namespace arapath {

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(polys.begin(), polys.end(), [](const Polynomial& f) {
    return !f.is_zero() && f.leading_monomial().is_unit();
  });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw DomainError("s_polynomial of the zero polynomial");
  }
  require_same_ring(f, g);
  const PrimeField& F = f.ring().field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial left = f.monomial_mul(F.inv(f.leading_coeff()),
                                   quotient(l, f.leading_monomial()));
  Polynomial right = g.monomial_mul(F.inv(g.leading_coeff()),
                                    quotient(l, g.leading_monomial()));
  return left - right;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) require_same_ring(f, g);
  const Ring& ring = f.ring();
  const PrimeField& F = ring.field();
  Polynomial h = f;
  std::vector<Polynomial::Term> remainder;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.leading_monomial(), h.leading_monomial())) {
        std::uint32_t c = F.mul(h.leading_coeff(), F.inv(g.leading_coeff()));
        Monomial q = quotient(h.leading_monomial(), g.leading_monomial());
        h = h - g.monomial_mul(c, q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // leading monomials strictly decrease, so the remainder stays sorted
      remainder.push_back(h.leading_term());
      h = h.tail();
    }
  }
  std::vector<Polynomial::RawTerm> raw;
  raw.reserve(remainder.size());
  for (auto& t : remainder) {
    raw.push_back({static_cast<std::int64_t>(t.coeff), std::move(t.mono)});
  }
  return Polynomial::from_terms(ring, std::move(raw));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return normal_form(f, std::span<const Polynomial>(basis));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, std::span<const Polynomial>(gb.polys));
}

namespace {

struct CriticalPair {
  std::size_t i, j;  // i < j
  Monomial lcm_mono;
  std::int64_t lcm_deg;
};

/// Normal strategy: (deg lcm, lex(lcm), i, j).
bool pair_before(const CriticalPair& a, const CriticalPair& b) {
  if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
  auto cmp = compare(a.lcm_mono, b.lcm_mono, OrderKind::lex);
  if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

/// Gebauer-Moeller update: appends h to G and refreshes the pair set,
/// discarding pairs covered by the chain criterion and new pairs with
/// coprime leading monomials.
void update_pairs(std::vector<Polynomial>& basis,
                  std::list<CriticalPair>& pairs, Polynomial h) {
  const std::size_t idx = basis.size();
  const Monomial& lm_h = h.leading_monomial();

  // chain criterion on old pairs
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Monomial& lm_i = basis[it->i].leading_monomial();
    const Monomial& lm_j = basis[it->j].leading_monomial();
    if (divides(lm_h, it->lcm_mono) && !(lcm(lm_i, lm_h) == it->lcm_mono) &&
        !(lcm(lm_j, lm_h) == it->lcm_mono)) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }

  std::vector<CriticalPair> fresh;
  fresh.reserve(idx);
  for (std::size_t k = 0; k < idx; ++k) {
    Monomial l = lcm(basis[k].leading_monomial(), lm_h);
    fresh.push_back({k, idx, std::move(l), 0});
    fresh.back().lcm_deg = fresh.back().lcm_mono.degree();
  }
  // keep only divisibility-minimal lcms among the fresh pairs; among equal
  // lcms keep the smallest index
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
      if (a == b || drop[b]) continue;
      if (fresh[b].lcm_mono == fresh[a].lcm_mono) {
        if (b < a) drop[a] = true;
      } else if (divides(fresh[b].lcm_mono, fresh[a].lcm_mono)) {
        drop[a] = true;
      }
    }
  }
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    // product criterion
    if (coprime(basis[fresh[a].i].leading_monomial(), lm_h)) continue;
    pairs.push_back(std::move(fresh[a]));
  }
  basis.push_back(std::move(h));
}

/// Removes elements whose leading monomial is divisible by another's,
/// tail-reduces each survivor against the rest, and sorts ascending: the
/// unique reduced Groebner basis of the same ideal.
void interreduce(std::vector<Polynomial>& basis, OrderKind order) {
  std::size_t i = 0;
  while (i < basis.size()) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].leading_monomial(), basis[i].leading_monomial()) &&
          !(basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)) {
        redundant = true;
      }
    }
    if (redundant) {
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != k) others.push_back(basis[j]);
    }
    basis[k] = normal_form(basis[k], others).monic();
  }
  std::sort(basis.begin(), basis.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) ==
           std::strong_ordering::less;
  });
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators,
                         const GroebnerBudgets& budgets) {
  std::erase_if(generators, [](const Polynomial& f) { return f.is_zero(); });
  if (generators.empty()) {
    throw DomainError("buchberger requires at least one nonzero generator");
  }
  const Ring ring = generators.front().ring();
  for (const auto& f : generators) {
    if (!(f.ring() == ring)) throw RingMismatchError("mixed rings in buchberger");
    if (f.degree() > budgets.max_degree) {
      throw BudgetExceeded("degree", "generator degree exceeds cap of " +
                                         std::to_string(budgets.max_degree));
    }
  }

  std::vector<Polynomial> basis;
  std::list<CriticalPair> pairs;
  for (auto& f : generators) update_pairs(basis, pairs, f.monic());

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (pair_before(*it, *best)) best = it;
    }
    CriticalPair pair = std::move(*best);
    pairs.erase(best);

    if (++reductions > budgets.max_pair_reductions) {
      throw BudgetExceeded("pairs", "pair reduction cap of " +
                                        std::to_string(budgets.max_pair_reductions) +
                                        " exceeded");
    }
    if (pair.lcm_deg > budgets.max_degree) {
      throw BudgetExceeded("degree", "S-pair lcm degree " +
                                         std::to_string(pair.lcm_deg) +
                                         " exceeds cap of " +
                                         std::to_string(budgets.max_degree));
    }

    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j]);
    Polynomial h = normal_form(s, basis);
    if (!h.is_zero()) update_pairs(basis, pairs, h.monic());
  }

  interreduce(basis, ring.order());
  return GroebnerBasis{ring, std::move(basis), true};
}

bool is_groebner_basis(std::span<const Polynomial> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].is_zero() || polys[j].is_zero()) continue;
      Polynomial s = s_polynomial(polys[i], polys[j]);
      if (!normal_form(s, polys).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_contains(const Polynomial& f, const std::vector<Polynomial>& generators,
                    const GroebnerBudgets& budgets) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> nonzero = generators;
  std::erase_if(nonzero, [](const Polynomial& g) { return g.is_zero(); });
  if (nonzero.empty()) return false;
  return normal_form(f, buchberger(std::move(nonzero), budgets)).is_zero();
}

}  // namespace arapath
