#ifndef ARAPATH_BLOCK_PAIR_HPP
#define ARAPATH_BLOCK_PAIR_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arapath/radical.hpp"

namespace arapath {

/// Two polynomials over the canonical variables x1..x_{2t} whose radical
/// equals the block ideal (x_i...x_{i+t-1} : i = 1..t+1). `verified` is
/// set only after verify_radical_equality passed against that ideal.
struct BlockPair {
  std::int32_t t = 0;
  Polynomial first;
  Polynomial second;
  std::string provenance;  // "builtin" | "config" | "search"
  bool verified = false;

  std::vector<Polynomial> polys() const { return {first, second}; }
};

enum class PairSource { builtin, config, search };

struct PairSearchLimits {
  std::size_t max_verifications = 256;   // full certifier runs
  std::size_t max_candidates = 250'000;  // family members enumerated
};

struct PairOptions {
  std::vector<PairSource> sources{PairSource::builtin, PairSource::config,
                                  PairSource::search};
  std::string config_path;  // empty: no config source
  PairSearchLimits search;
  std::uint32_t characteristic = kDefaultCharacteristic;
  OrderKind order = OrderKind::degrevlex;
  GroebnerBudgets gb;
};

/// The block ideal on 2t variables: t+1 consecutive windows of length t.
MonomialIdeal block_ideal(std::int32_t t,
                          std::uint32_t p = kDefaultCharacteristic,
                          OrderKind order = OrderKind::degrevlex);

/// Hand-written pairs for small t: (x1, x2) for t=1 and
/// (x1*x2 + x3*x4, x2*x3) for t=2. Unverified; run verify_block_pair.
std::optional<BlockPair> builtin_block_pair(
    std::int32_t t, std::uint32_t p = kDefaultCharacteristic,
    OrderKind order = OrderKind::degrevlex);

/// Runs the radical-equality certifier against the canonical block ideal
/// and records the outcome in pair.verified.
RadicalEqualityReport verify_block_pair(BlockPair& pair,
                                        const GroebnerBudgets& budgets = {});

/// Bounded deterministic search over the family
///   ( sum_{i in S1} c_i u_i m_i , sum_{i in S2} c_i u_i m_i )
/// where {S1, S2} partitions the t+1 block monomials m_i, c_i = +-1, and
/// u_i is a monomial of degree <= 1 in the block's 2t variables.
/// Candidates are enumerated by ascending total multiplier degree, then
/// partition, signs, and multiplier choice; cheap point tests over
/// {0, 1, -1} coordinates discard most losers before the certifier runs.
/// `limits.max_verifications` caps certifier calls; the first candidate
/// that verifies is returned.
std::optional<BlockPair> search_block_pair(
    std::int32_t t, const PairSearchLimits& limits = {},
    std::uint32_t p = kDefaultCharacteristic,
    OrderKind order = OrderKind::degrevlex, const GroebnerBudgets& gb = {});

/// Walks `options.sources` in order and returns the first pair that
/// passes verification on the canonical block (always re-run, whatever
/// the source). Throws PairUnavailable when every source comes up empty.
BlockPair get_block_pair(std::int32_t t, const PairOptions& options);

/// One config line per pair: `t=2: x1*x2 + x3*x4 | x2*x3`. Blank lines and
/// '#' comments are skipped. Each parsed pair is re-verified; rejected
/// lines are reported through `diagnostics` (line number + reason) and
/// dropped.
std::vector<BlockPair> load_pair_config(std::istream& in,
                                        std::vector<std::string>& diagnostics,
                                        std::uint32_t p = kDefaultCharacteristic,
                                        OrderKind order = OrderKind::degrevlex,
                                        const GroebnerBudgets& gb = {});
std::vector<BlockPair> load_pair_file(const std::string& path,
                                      std::vector<std::string>& diagnostics,
                                      std::uint32_t p = kDefaultCharacteristic,
                                      OrderKind order = OrderKind::degrevlex,
                                      const GroebnerBudgets& gb = {});

/// Renders a pair in the config-line syntax.
std::string pair_config_line(const BlockPair& pair);

}  // namespace arapath

#endif
