#ifndef ARAPATH_RADICAL_HPP
#define ARAPATH_RADICAL_HPP

#include <string>
#include <vector>

#include "arapath/groebner.hpp"
#include "arapath/monomial_ideal.hpp"

namespace arapath {

enum class CheckStatus { pass, fail, budget };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string kind;    // "forward" | "backward"
  std::string target;  // printed polynomial / monomial under test
  CheckStatus status = CheckStatus::fail;
  std::string note;    // populated on budget aborts
};

/// Transcript of a radical-equality certification:
///   forward  - every candidate polynomial lies in the monomial ideal,
///   backward - every ideal generator lies in the radical of the candidates.
/// verdict is true iff all checks pass.
struct RadicalEqualityReport {
  bool verdict = false;
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t budgeted() const;
};

/// f in sqrt((gens)) decided by one Groebner run in a ring with a fresh
/// variable z: true iff 1 lies in (gens, 1 - z*f). Exact over GF(p) and
/// valid over any coefficient field; no power bound is needed.
bool radical_contains(const std::vector<Polynomial>& gens, const Polynomial& f,
                      const GroebnerBudgets& budgets = {});

/// Decides sqrt((candidates)) = target for a square-free monomial ideal
/// `target` (square-free, hence radical, so equality reduces to the two
/// inclusions checked here). Throws DomainError on a non-square-free
/// target; a budget abort inside a backward check is recorded on that
/// check instead of propagating.
RadicalEqualityReport verify_radical_equality(const std::vector<Polynomial>& candidates,
                                              const MonomialIdeal& target,
                                              const GroebnerBudgets& budgets = {});

}  // namespace arapath

#endif
