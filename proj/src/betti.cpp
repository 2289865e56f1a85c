#include "arapath/betti.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "arapath/simplicial.hpp"

namespace arapath {

std::int32_t BettiTable::projective_dimension() const {
  std::int32_t pd = 0;
  for (const auto& [key, rank] : entries) {
    const auto& [i, sigma] = key;
    if (i == 0 && sigma == 0) continue;  // R itself
    pd = std::max(pd, i);
  }
  return pd;
}

std::int64_t BettiTable::total(std::int32_t i) const {
  std::int64_t sum = 0;
  for (const auto& [key, rank] : entries) {
    if (key.first == i) sum += rank;
  }
  return sum;
}

std::vector<std::int32_t> BettiTable::multidegree_labels(std::uint32_t mask) const {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (mask & (1u << i)) out.push_back(variables[i]);
  }
  return out;
}

namespace {

/// Canonical form of a component complex: vertex count plus the sorted
/// contained generator supports, relabeled to 0..s-1.
struct ComplexKey {
  std::int32_t nverts;
  std::vector<std::uint32_t> gens;
  friend bool operator==(const ComplexKey&, const ComplexKey&) = default;
};

struct ComplexKeyHash {
  std::size_t operator()(const ComplexKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.nverts) * 1099511628211ull;
    for (std::uint32_t g : k.gens) {
      h ^= g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Reduced homology ranks (offset by one: index 0 is H~_{-1}) of the
/// complex on `nverts` vertices whose non-faces are generated by `gens`.
std::vector<std::int64_t> component_ranks(const ComplexKey& key, std::uint32_t p) {
  std::vector<std::uint32_t> faces;
  const std::uint32_t limit = 1u << key.nverts;
  faces.reserve(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool face = true;
    for (std::uint32_t g : key.gens) {
      if ((mask & g) == g) {
        face = false;
        break;
      }
    }
    if (face) faces.push_back(mask);
  }
  return detail::homology_ranks_from_faces(faces, key.nverts, p);
}

/// Join of complexes over a field: the rank vectors (offset convention)
/// multiply as ordinary convolutions.
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& M, std::uint32_t p,
                       std::int32_t var_cap) {
  PrimeField field_check(p);
  if (!M.is_squarefree()) {
    throw DomainError("Betti table computation needs a square-free ideal");
  }
  if (M.is_unit()) {
    throw DomainError("the unit ideal has a zero quotient; no Betti table");
  }

  BettiTable table;
  table.characteristic = p;

  // variables actually appearing in M
  for (const auto& g : M.generators()) {
    for (const auto& [v, e] : g.factors()) table.variables.push_back(v);
  }
  std::sort(table.variables.begin(), table.variables.end());
  table.variables.erase(
      std::unique(table.variables.begin(), table.variables.end()),
      table.variables.end());
  const std::int32_t r = static_cast<std::int32_t>(table.variables.size());
  if (r > var_cap) {
    throw BudgetExceeded("variable-cap",
                         "ideal involves " + std::to_string(r) +
                             " variables, cap is " + std::to_string(var_cap));
  }

  auto position = [&](std::int32_t v) {
    return static_cast<std::uint32_t>(
        std::lower_bound(table.variables.begin(), table.variables.end(), v) -
        table.variables.begin());
  };
  std::vector<std::uint32_t> gmasks;
  gmasks.reserve(M.generators().size());
  for (const auto& g : M.generators()) {
    std::uint32_t mask = 0;
    for (const auto& [v, e] : g.factors()) mask |= 1u << position(v);
    gmasks.push_back(mask);
  }

  std::unordered_map<ComplexKey, std::vector<std::int64_t>, ComplexKeyHash> memo;

  const std::uint64_t sigma_limit = std::uint64_t(1) << r;
  std::vector<std::uint32_t> contained;
  for (std::uint64_t sigma64 = 0; sigma64 < sigma_limit; ++sigma64) {
    const std::uint32_t sigma = static_cast<std::uint32_t>(sigma64);
    contained.clear();
    std::uint32_t covered = 0;
    for (std::uint32_t g : gmasks) {
      if ((g & sigma) == g) {
        contained.push_back(g);
        covered |= g;
      }
    }
    // a vertex lying in no contained generator support makes the
    // restriction a cone: all reduced homology vanishes
    if (covered != sigma) continue;

    // connected components of sigma under "co-occur in a contained support"
    std::vector<std::uint32_t> comps;
    {
      std::uint32_t remaining = sigma;
      while (remaining != 0) {
        std::uint32_t comp = remaining & (~remaining + 1);
        for (;;) {
          std::uint32_t grown = comp;
          for (std::uint32_t g : contained) {
            if (g & grown) grown |= g;
          }
          if (grown == comp) break;
          comp = grown;
        }
        comps.push_back(comp);
        remaining &= ~comp;
      }
    }

    std::vector<std::int64_t> conv{1};  // the complex {emptyset}
    for (std::uint32_t comp : comps) {
      // canonicalize the component complex
      ComplexKey key;
      key.nverts = std::popcount(comp);
      std::vector<std::int32_t> pos_of(32, -1);
      {
        std::int32_t next = 0;
        for (std::int32_t b = 0; b < 32; ++b) {
          if (comp & (1u << b)) pos_of[static_cast<std::size_t>(b)] = next++;
        }
      }
      for (std::uint32_t g : contained) {
        if ((g & comp) == 0) continue;
        std::uint32_t local = 0;
        for (std::int32_t b = 0; b < 32; ++b) {
          if (g & (1u << b)) local |= 1u << pos_of[static_cast<std::size_t>(b)];
        }
        key.gens.push_back(local);
      }
      std::sort(key.gens.begin(), key.gens.end());

      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, component_ranks(key, p)).first;
      }
      conv = convolve(conv, it->second);
      if (all_zero(conv)) break;  // contractible factor kills the join
    }

    const std::int32_t s = std::popcount(sigma);
    for (std::size_t k = 0; k < conv.size(); ++k) {
      if (conv[k] == 0) continue;
      // offset index k holds H~_{k-1}; Hochster gives i = s - k
      std::int32_t i = s - static_cast<std::int32_t>(k);
      table.entries[{i, sigma}] += conv[k];
    }
  }

  return table;
}

std::int32_t projective_dimension(const MonomialIdeal& M, std::uint32_t p,
                                  std::int32_t var_cap) {
  return betti_table(M, p, var_cap).projective_dimension();
}

}  // namespace arapath
