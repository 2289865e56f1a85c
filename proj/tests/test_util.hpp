#ifndef ARAPATH_TEST_UTIL_HPP
#define ARAPATH_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "arapath/io.hpp"
#include "arapath/monomial_ideal.hpp"

namespace testutil {

using namespace arapath;

inline Polynomial P(const Ring& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline Monomial M(const Ring& ring, const std::string& text) {
  Polynomial f = parse_polynomial(text, ring);
  return f.terms().front().mono;
}

inline MonomialIdeal I(const Ring& ring, const std::string& text) {
  return parse_ideal(text, ring);
}

/// Deterministic generators for the randomized property suites.
struct Rand {
  std::mt19937 rng;
  explicit Rand(std::uint32_t seed) : rng(seed) {}

  std::int32_t uniform(std::int32_t lo, std::int32_t hi) {
    return std::uniform_int_distribution<std::int32_t>(lo, hi)(rng);
  }

  Monomial monomial(std::int32_t nvars, std::int32_t max_exp) {
    std::vector<Monomial::VarExp> fs;
    for (std::int32_t v = 1; v <= nvars; ++v) {
      std::int32_t e = uniform(0, max_exp);
      if (e > 0) fs.push_back({v, e});
    }
    return Monomial::from_pairs(std::move(fs));
  }

  Monomial squarefree_monomial(std::int32_t nvars, std::int32_t min_deg = 1) {
    for (;;) {
      std::vector<Monomial::VarExp> fs;
      for (std::int32_t v = 1; v <= nvars; ++v) {
        if (uniform(0, 1)) fs.push_back({v, 1});
      }
      if (static_cast<std::int32_t>(fs.size()) >= min_deg) {
        return Monomial::from_pairs(std::move(fs));
      }
    }
  }

  Polynomial polynomial(const Ring& ring, std::int32_t max_terms,
                        std::int32_t max_exp) {
    std::vector<Polynomial::RawTerm> terms;
    std::int32_t nterms = uniform(0, max_terms);
    for (std::int32_t i = 0; i < nterms; ++i) {
      terms.push_back({uniform(-10, 10), monomial(ring.nvars(), max_exp)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  MonomialIdeal squarefree_ideal(const Ring& ring, std::int32_t max_gens) {
    std::vector<Monomial> gens;
    std::int32_t ngens = uniform(1, max_gens);
    for (std::int32_t i = 0; i < ngens; ++i) {
      gens.push_back(squarefree_monomial(ring.nvars()));
    }
    return MonomialIdeal(ring, std::move(gens));
  }
};

}  // namespace testutil

#endif
