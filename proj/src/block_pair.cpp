#include "arapath/block_pair.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "arapath/io.hpp"

namespace arapath {

MonomialIdeal block_ideal(std::int32_t t, std::uint32_t p, OrderKind order) {
  if (t < 1) throw DomainError("block parameter t must be >= 1");
  Ring ring(2 * t, p, order);
  std::vector<Monomial> gens;
  for (std::int32_t i = 1; i <= t + 1; ++i) {
    std::vector<Monomial::VarExp> fs;
    for (std::int32_t v = i; v < i + t; ++v) fs.push_back({v, 1});
    gens.push_back(Monomial::from_pairs(std::move(fs)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::optional<BlockPair> builtin_block_pair(std::int32_t t, std::uint32_t p,
                                            OrderKind order) {
  if (t < 1) throw DomainError("block parameter t must be >= 1");
  Ring ring(2 * t, p, order);
  if (t == 1) {
    return BlockPair{t, parse_polynomial("x1", ring),
                     parse_polynomial("x2", ring), "builtin", false};
  }
  if (t == 2) {
    return BlockPair{t, parse_polynomial("x1*x2 + x3*x4", ring),
                     parse_polynomial("x2*x3", ring), "builtin", false};
  }
  return std::nullopt;
}

RadicalEqualityReport verify_block_pair(BlockPair& pair,
                                        const GroebnerBudgets& budgets) {
  MonomialIdeal target = block_ideal(pair.t, pair.first.ring().characteristic(),
                                     pair.first.ring().order());
  RadicalEqualityReport report =
      verify_radical_equality(pair.polys(), target, budgets);
  pair.verified = report.verdict;
  return report;
}

namespace {

/// Candidate filter: every point with coordinates in {0, 1, -1} where some
/// block monomial survives. A candidate vanishing at such a point cannot
/// have the block ideal's radical and is rejected without a Groebner run.
/// scaled[point] holds the value of u * m_i for every multiplier u
/// (u = 0 is the trivial multiplier, u = v > 0 is x_v), laid out as
/// i * nmults + u.
struct FilterGrid {
  std::vector<std::vector<std::uint32_t>> scaled;
  std::size_t nmonos = 0;
  std::size_t nmults = 0;
};

FilterGrid build_filter_grid(const std::vector<Monomial>& monos,
                             std::int32_t nvars, const PrimeField& F) {
  std::vector<std::uint32_t> coords{0, 1, F.neg(1)};
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  FilterGrid grid;
  grid.nmonos = monos.size();
  grid.nmults = static_cast<std::size_t>(nvars) + 1;

  std::vector<std::uint32_t> point(static_cast<std::size_t>(nvars), 0);
  std::uint64_t total = 1;
  for (std::int32_t i = 0; i < nvars; ++i) total *= coords.size();

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::int32_t v = 0; v < nvars; ++v) {
      point[static_cast<std::size_t>(v)] = coords[rest % coords.size()];
      rest /= coords.size();
    }
    std::vector<std::uint32_t> vals(grid.nmonos);
    bool informative = false;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      std::uint32_t v = 1;
      for (const auto& [var, exp] : monos[i].factors()) {
        v = F.mul(v, F.pow(point[static_cast<std::size_t>(var - 1)],
                           static_cast<std::uint64_t>(exp)));
      }
      vals[i] = v;
      if (v != 0) informative = true;
    }
    if (!informative) continue;
    std::vector<std::uint32_t> row(grid.nmonos * grid.nmults);
    for (std::size_t i = 0; i < grid.nmonos; ++i) {
      row[i * grid.nmults] = vals[i];
      for (std::size_t u = 1; u < grid.nmults; ++u) {
        row[i * grid.nmults + u] = F.mul(vals[i], point[u - 1]);
      }
    }
    grid.scaled.push_back(std::move(row));
  }
  return grid;
}

/// Odometer over combinations pos[0] < ... < pos[w-1] drawn from 0..m-1.
bool next_combination(std::vector<std::size_t>& pos, std::size_t m) {
  const std::size_t w = pos.size();
  for (std::size_t i = w; i-- > 0;) {
    if (pos[i] + 1 <= m - (w - i)) {
      ++pos[i];
      for (std::size_t j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<BlockPair> search_block_pair(std::int32_t t,
                                           const PairSearchLimits& limits,
                                           std::uint32_t p, OrderKind order,
                                           const GroebnerBudgets& gb) {
  if (t < 1) throw DomainError("block parameter t must be >= 1");
  const Ring ring(2 * t, p, order);
  const PrimeField& F = ring.field();
  const MonomialIdeal target = block_ideal(t, p, order);
  const std::vector<Monomial>& monos = target.generators();
  const std::size_t m = monos.size();  // t + 1
  const std::size_t nmults = static_cast<std::size_t>(2 * t) + 1;

  const FilterGrid grid = build_filter_grid(monos, ring.nvars(), F);

  std::size_t scanned = 0;
  std::size_t verified = 0;
  std::vector<std::size_t> mult(m, 0);

  std::optional<BlockPair> found;
  bool stop = false;

  auto consider = [&](std::uint32_t part_mask, std::uint32_t sign_mask) {
    if (++scanned > limits.max_candidates) {
      stop = true;
      return;
    }
    for (const auto& row : grid.scaled) {
      std::uint32_t f1 = 0, f2 = 0;
      for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t v = row[i * nmults + mult[i]];
        if (sign_mask & (1u << i)) v = F.neg(v);
        if (part_mask & (1u << i)) {
          f1 = F.add(f1, v);
        } else {
          f2 = F.add(f2, v);
        }
      }
      if (f1 == 0 && f2 == 0) return;  // witness point: reject cheaply
    }
    if (verified >= limits.max_verifications) {
      stop = true;
      return;
    }
    ++verified;
    std::vector<Polynomial::RawTerm> terms1, terms2;
    for (std::size_t i = 0; i < m; ++i) {
      Monomial mono =
          mult[i] == 0
              ? monos[i]
              : monos[i] * Monomial::variable(static_cast<std::int32_t>(mult[i]));
      std::int64_t c = (sign_mask & (1u << i)) ? -1 : 1;
      (part_mask & (1u << i) ? terms1 : terms2).push_back({c, std::move(mono)});
    }
    BlockPair pair{t, Polynomial::from_terms(ring, std::move(terms1)),
                   Polynomial::from_terms(ring, std::move(terms2)), "search",
                   false};
    verify_block_pair(pair, gb);
    if (pair.verified) {
      found = std::move(pair);
      stop = true;
    }
  };

  // ascending total multiplier degree, then multiplier positions and
  // values, then partition, then signs: fully deterministic
  for (std::size_t w = 0; w <= m && !stop; ++w) {
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    do {
      std::vector<std::size_t> choice(w, 1);
      for (;;) {
        std::fill(mult.begin(), mult.end(), 0);
        for (std::size_t i = 0; i < w; ++i) mult[pos[i]] = choice[i];

        const std::uint32_t full = (1u << m) - 1;
        for (std::uint32_t part = 1; part < full && !stop; part += 2) {
          const std::uint32_t s2 = full & ~part;
          const std::uint32_t fixed = (part & (~part + 1)) | (s2 & (~s2 + 1));
          const std::uint32_t free_bits = full & ~fixed;
          std::uint32_t signs = 0;
          for (;;) {
            consider(part, signs);
            if (stop || signs == free_bits) break;
            signs = (signs - free_bits) & free_bits;
          }
        }
        if (stop || w == 0) break;

        bool advanced = false;
        for (std::size_t i = w; i-- > 0;) {
          if (choice[i] + 1 < nmults) {
            ++choice[i];
            for (std::size_t j = i + 1; j < w; ++j) choice[j] = 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    } while (!stop && w > 0 && next_combination(pos, m));
  }
  return found;
}

BlockPair get_block_pair(std::int32_t t, const PairOptions& options) {
  for (PairSource source : options.sources) {
    switch (source) {
      case PairSource::builtin: {
        auto pair = builtin_block_pair(t, options.characteristic, options.order);
        if (pair) {
          verify_block_pair(*pair, options.gb);
          if (pair->verified) return *pair;
        }
        break;
      }
      case PairSource::config: {
        if (options.config_path.empty()) break;
        std::vector<std::string> diagnostics;
        auto pairs = load_pair_file(options.config_path, diagnostics,
                                    options.characteristic, options.order,
                                    options.gb);
        for (auto& pair : pairs) {
          if (pair.t == t && pair.verified) return pair;
        }
        break;
      }
      case PairSource::search: {
        auto pair = search_block_pair(t, options.search, options.characteristic,
                                      options.order, options.gb);
        if (pair && pair->verified) return *pair;
        break;
      }
    }
  }
  throw PairUnavailable(t);
}

std::vector<BlockPair> load_pair_config(std::istream& in,
                                        std::vector<std::string>& diagnostics,
                                        std::uint32_t p, OrderKind order,
                                        const GroebnerBudgets& gb) {
  std::vector<BlockPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) {
      view.remove_prefix(1);
    }
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) {
      view.remove_suffix(1);
    }
    if (view.empty()) continue;

    auto reject = [&](const std::string& why) {
      diagnostics.push_back("line " + std::to_string(lineno) + ": " + why);
    };

    if (view.substr(0, 2) != "t=") {
      reject("expected 't=<int>: <poly> | <poly>'");
      continue;
    }
    std::size_t colon = view.find(':');
    if (colon == std::string_view::npos) {
      reject("missing ':'");
      continue;
    }
    std::int32_t t = 0;
    try {
      t = std::stoi(std::string(view.substr(2, colon - 2)));
    } catch (...) {
      reject("bad t value");
      continue;
    }
    if (t < 1) {
      reject("t must be >= 1");
      continue;
    }
    std::string_view body = view.substr(colon + 1);
    std::size_t bar = body.find('|');
    if (bar == std::string_view::npos) {
      reject("expected two polynomials separated by '|'");
      continue;
    }
    Ring ring(2 * t, p, order);
    std::optional<BlockPair> parsed;
    try {
      parsed = BlockPair{t, parse_polynomial(body.substr(0, bar), ring),
                         parse_polynomial(body.substr(bar + 1), ring), "config",
                         false};
    } catch (const Error& e) {
      reject(e.what());
      continue;
    }
    BlockPair& pair = *parsed;
    try {
      verify_block_pair(pair, gb);
    } catch (const Error& e) {
      reject(std::string("verification aborted: ") + e.what());
      continue;
    }
    if (!pair.verified) {
      reject("pair fails radical-equality verification against its block ideal");
      continue;
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<BlockPair> load_pair_file(const std::string& path,
                                      std::vector<std::string>& diagnostics,
                                      std::uint32_t p, OrderKind order,
                                      const GroebnerBudgets& gb) {
  std::ifstream in(path);
  if (!in) {
    diagnostics.push_back("cannot open pair config '" + path + "'");
    return {};
  }
  return load_pair_config(in, diagnostics, p, order, gb);
}

std::string pair_config_line(const BlockPair& pair) {
  std::ostringstream out;
  out << "t=" << pair.t << ": " << to_string(pair.first) << " | "
      << to_string(pair.second);
  return out.str();
}

}  // namespace arapath
