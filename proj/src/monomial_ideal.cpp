#include "arapath/monomial_ideal.hpp"

#include <algorithm>

namespace arapath {

MonomialIdeal::MonomialIdeal(const Ring& ring, std::vector<Monomial> generators)
    : ring_(ring) {
  for (const auto& g : generators) {
    if (g.max_var() > ring.nvars()) {
      throw DomainError("generator uses a variable outside the ring");
    }
  }
  // keep only divisibility-minimal elements
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(generators[j], generators[i]) &&
          !(generators[j] == generators[i] && j > i)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(generators[i]);
  }
  // canonical display order: degree first, then leftmost support first
  std::sort(minimal.begin(), minimal.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return compare(a, b, OrderKind::lex) == std::strong_ordering::greater;
            });
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  gens_ = std::move(minimal);
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
  if (!(f.ring() == ring_)) {
    throw RingMismatchError("polynomial and ideal live in different rings");
  }
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Polynomial::Term& t) { return contains(t.mono); });
}

std::vector<Polynomial> MonomialIdeal::generator_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(Polynomial::monomial(ring_, g));
  return out;
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> monomials) {
  return MonomialIdeal(ring, std::move(monomials));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring().characteristic() != b.ring().characteristic() ||
      a.ring().order() != b.ring().order()) {
    throw RingMismatchError("ideal sum needs matching coefficient field and order");
  }
  Ring wide = a.ring().nvars() >= b.ring().nvars() ? a.ring() : b.ring();
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(wide, std::move(gens));
}

MonomialIdeal reverse_variables(const MonomialIdeal& m) {
  const std::int32_t n = m.ring().nvars();
  std::vector<Monomial> gens;
  gens.reserve(m.generators().size());
  for (const auto& g : m.generators()) {
    gens.push_back(g.remapped([n](std::int32_t v) { return n + 1 - v; }));
  }
  return MonomialIdeal(m.ring(), std::move(gens));
}

}  // namespace arapath
