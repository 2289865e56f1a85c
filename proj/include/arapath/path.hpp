#ifndef ARAPATH_PATH_HPP
#define ARAPATH_PATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "arapath/betti.hpp"
#include "arapath/block_pair.hpp"

namespace arapath {

/// n = k(t+1) + d with 0 <= d <= t; the decomposition is unique.
struct PathDecomposition {
  std::int32_t n = 0;
  std::int32_t t = 0;
  std::int32_t k = 0;
  std::int32_t d = 0;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

PathDecomposition decompose_path(std::int32_t n, std::int32_t t);

/// The ideal generated by the n-t+1 products of t consecutive variables.
MonomialIdeal path_ideal(std::int32_t n, std::int32_t t,
                         std::uint32_t p = kDefaultCharacteristic,
                         OrderKind order = OrderKind::degrevlex);

/// Closed-form value: 2(n-d)/(t+1) when the residue d is at most t-1,
/// (2n-(t-1))/(t+1) = 2k+1 when d = t. Always a positive integer for
/// 1 <= t <= n.
std::int64_t ara_formula(std::int32_t n, std::int32_t t);

/// One group of t+1 consecutive window monomials. Block b covers window
/// starts b(t+1)+1 .. (b+1)(t+1) and spans variables b(t+1)+1 .. b(t+1)+2t;
/// adjacent blocks overlap in t-1 variables.
struct BlockWindows {
  std::int32_t index = 0;
  std::int32_t first_window = 0;
  std::int32_t last_window = 0;
  std::int32_t first_var = 0;
  std::int32_t last_var = 0;
};

/// The k full blocks. Requires residue d = t-1; with `allow_leftover` the
/// d = t shape is accepted too (the final window stays outside all blocks).
std::vector<BlockWindows> block_windows(const PathDecomposition& params,
                                        bool allow_leftover = false);

/// Extension windows appended past x_n so that the padded path ideal has
/// residue t-1: window starts k(t+1)+d-t+2 .. k(t+1), reaching into fresh
/// variables up to extended_n = n + (t-1-d). Only defined for d < t-1.
struct PaddingResult {
  MonomialIdeal ideal;          // lives in the extended ring
  std::int32_t extended_n = 0;
};

PaddingResult padding_ideal(const PathDecomposition& params,
                            std::uint32_t p = kDefaultCharacteristic,
                            OrderKind order = OrderKind::degrevlex);

/// Checks that every generator of J is divisible by some variable that
/// divides no generator of I. On success `witness` maps each generator of
/// J to such a variable; on failure `failing` holds the first generator
/// without one.
struct WitnessCheck {
  bool ok = false;
  std::vector<std::pair<Monomial, std::int32_t>> witness;
  std::optional<Monomial> failing;
};

WitnessCheck private_variable_witness(const MonomialIdeal& I,
                                      const MonomialIdeal& J);

/// Deletes from every polynomial all terms involving a variable of index
/// greater than `keep_max_var`; polynomials that become zero are dropped.
/// Idempotent. Output stays in the input ring.
std::vector<Polynomial> strip_variables_above(std::span<const Polynomial> polys,
                                              std::int32_t keep_max_var);

enum class VerifyMode { automatic, on, off };

struct ConstructOptions {
  std::uint32_t characteristic = kDefaultCharacteristic;
  OrderKind order = OrderKind::degrevlex;
  VerifyMode verify = VerifyMode::automatic;
  PairOptions pairs;
  GroebnerBudgets gb;
  bool compute_pd = true;
  std::int32_t betti_var_cap = kDefaultBettiVarCap;
};

/// Result of one constructive run: `generators` have the same radical as
/// path_ideal(n, t) whenever `verification` is present and passing;
/// `formula_value` is the closed-form target and `count` what the
/// construction achieved. Degraded certificates (no block pair) fall back
/// to the path monomials themselves and are flagged.
struct AraCertificate {
  PathDecomposition params;
  std::vector<Polynomial> generators;
  std::int64_t count = 0;
  std::int64_t formula_value = 0;
  std::optional<std::int32_t> pd_value;
  std::optional<RadicalEqualityReport> verification;
  std::vector<std::string> steps;
  bool degraded = false;
  std::string pair_provenance;  // empty when no pair was used

  bool count_matches_formula() const { return count == formula_value; }
};

/// Runs the three-case pipeline:
///   d = t-1 : k blocks, each replaced by the shifted verified pair;
///   d < t-1 : pad to extended_n (residue t-1), build there, then strip
///             the padding variables back off;
///   d = t   : k blocks over the first k(t+1) windows plus the untouched
///             final window.
/// With verification on, a failing radical-equality check raises
/// VerificationFailure. pd is attached via Hochster when the variable cap
/// allows, and verified certificates must satisfy pd <= count, with
/// pd = formula when the count is tight (InvariantViolation otherwise:
/// both would indicate a bug).
AraCertificate construct_certificate(std::int32_t n, std::int32_t t,
                                     const ConstructOptions& options = {});

}  // namespace arapath

#endif
