#include "arapath/radical.hpp"

#include <algorithm>

#include "arapath/io.hpp"

namespace arapath {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::budget: return "skipped(budget)";
  }
  return "?";
}

std::size_t RadicalEqualityReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckRecord& c) { return c.status == CheckStatus::pass; }));
}

std::size_t RadicalEqualityReport::failed() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckRecord& c) { return c.status == CheckStatus::fail; }));
}

std::size_t RadicalEqualityReport::budgeted() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckRecord& c) { return c.status == CheckStatus::budget; }));
}

bool radical_contains(const std::vector<Polynomial>& gens, const Polynomial& f,
                      const GroebnerBudgets& budgets) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> system;
  system.reserve(gens.size() + 1);
  const Ring ext = f.ring().extended(1);
  const std::int32_t z = ext.nvars();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(g, f);
    system.push_back(g.lifted(ext));
  }
  Polynomial zf = f.lifted(ext).monomial_mul(1, Monomial::variable(z));
  system.push_back(Polynomial::constant(ext, 1) - zf);
  return buchberger(std::move(system), budgets).is_unit_ideal();
}

RadicalEqualityReport verify_radical_equality(const std::vector<Polynomial>& candidates,
                                              const MonomialIdeal& target,
                                              const GroebnerBudgets& budgets) {
  if (!target.is_squarefree()) {
    throw DomainError("radical-equality target must be a square-free monomial ideal");
  }
  for (const auto& f : candidates) {
    if (!(f.ring() == target.ring())) {
      throw RingMismatchError("candidates and target live in different rings");
    }
  }

  RadicalEqualityReport report;
  bool all_pass = true;

  for (const auto& f : candidates) {
    CheckRecord rec{"forward", to_string(f), CheckStatus::fail, ""};
    rec.status = target.contains(f) ? CheckStatus::pass : CheckStatus::fail;
    all_pass = all_pass && rec.status == CheckStatus::pass;
    report.checks.push_back(std::move(rec));
  }

  for (const auto& g : target.generators()) {
    CheckRecord rec{"backward", to_string(g), CheckStatus::fail, ""};
    try {
      bool in = radical_contains(candidates,
                                 Polynomial::monomial(target.ring(), g), budgets);
      rec.status = in ? CheckStatus::pass : CheckStatus::fail;
    } catch (const BudgetExceeded& e) {
      rec.status = CheckStatus::budget;
      rec.note = e.what();
    }
    all_pass = all_pass && rec.status == CheckStatus::pass;
    report.checks.push_back(std::move(rec));
  }

  report.verdict = all_pass;
  return report;
}

}  // namespace arapath
