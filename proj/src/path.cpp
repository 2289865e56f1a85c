#include "arapath/path.hpp"

#include <algorithm>
#include <sstream>

#include "arapath/io.hpp"

namespace arapath {

namespace {

Monomial window_monomial(std::int32_t start, std::int32_t t) {
  std::vector<Monomial::VarExp> fs;
  fs.reserve(static_cast<std::size_t>(t));
  for (std::int32_t v = start; v < start + t; ++v) fs.push_back({v, 1});
  return Monomial::from_pairs(std::move(fs));
}

void require_path_params(std::int32_t n, std::int32_t t) {
  if (t < 1) throw DomainError("path parameter t must be >= 1");
  if (n < t) {
    throw DomainError("path needs n >= t: got n=" + std::to_string(n) +
                      ", t=" + std::to_string(t));
  }
}

}  // namespace

PathDecomposition decompose_path(std::int32_t n, std::int32_t t) {
  require_path_params(n, t);
  PathDecomposition out;
  out.n = n;
  out.t = t;
  out.k = n / (t + 1);
  out.d = n % (t + 1);
  return out;
}

MonomialIdeal path_ideal(std::int32_t n, std::int32_t t, std::uint32_t p,
                         OrderKind order) {
  require_path_params(n, t);
  Ring ring(n, p, order);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(n - t + 1));
  for (std::int32_t i = 1; i <= n - t + 1; ++i) {
    gens.push_back(window_monomial(i, t));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::int64_t ara_formula(std::int32_t n, std::int32_t t) {
  PathDecomposition pd = decompose_path(n, t);
  if (pd.d == pd.t) return 2ll * pd.k + 1;
  return 2ll * pd.k;
}

std::vector<BlockWindows> block_windows(const PathDecomposition& params,
                                        bool allow_leftover) {
  if (params.d != params.t - 1 && !(allow_leftover && params.d == params.t)) {
    throw DomainError("full blocks need residue d = t-1 (got d=" +
                      std::to_string(params.d) + ", t=" +
                      std::to_string(params.t) + ")");
  }
  std::vector<BlockWindows> out;
  out.reserve(static_cast<std::size_t>(params.k));
  for (std::int32_t b = 0; b < params.k; ++b) {
    BlockWindows w;
    w.index = b;
    w.first_window = b * (params.t + 1) + 1;
    w.last_window = (b + 1) * (params.t + 1);
    w.first_var = w.first_window;
    w.last_var = b * (params.t + 1) + 2 * params.t;
    out.push_back(w);
  }
  return out;
}

PaddingResult padding_ideal(const PathDecomposition& params, std::uint32_t p,
                            OrderKind order) {
  if (params.d >= params.t - 1) {
    throw DomainError("padding applies only when the residue d < t-1");
  }
  const std::int32_t extended_n = params.n + (params.t - 1 - params.d);
  Ring ring(extended_n, p, order);
  std::vector<Monomial> gens;
  const std::int32_t lo = params.k * (params.t + 1) + params.d - params.t + 2;
  const std::int32_t hi = params.k * (params.t + 1);
  for (std::int32_t i = lo; i <= hi; ++i) {
    gens.push_back(window_monomial(i, params.t));
  }
  return PaddingResult{MonomialIdeal(ring, std::move(gens)), extended_n};
}

WitnessCheck private_variable_witness(const MonomialIdeal& I,
                                      const MonomialIdeal& J) {
  WitnessCheck out;
  out.ok = true;
  for (const auto& g : J.generators()) {
    std::optional<std::int32_t> witness_var;
    for (const auto& [v, e] : g.factors()) {
      bool used_by_i = false;
      for (const auto& gi : I.generators()) {
        if (gi.exponent(v) > 0) {
          used_by_i = true;
          break;
        }
      }
      if (!used_by_i) {
        witness_var = v;
        break;
      }
    }
    if (witness_var) {
      out.witness.push_back({g, *witness_var});
    } else {
      out.ok = false;
      out.failing = g;
      return out;
    }
  }
  return out;
}

std::vector<Polynomial> strip_variables_above(std::span<const Polynomial> polys,
                                              std::int32_t keep_max_var) {
  std::vector<Polynomial> out;
  for (const Polynomial& f : polys) {
    std::vector<Polynomial::RawTerm> kept;
    for (const auto& term : f.terms()) {
      if (term.mono.max_var() <= keep_max_var) {
        kept.push_back({static_cast<std::int64_t>(term.coeff), term.mono});
      }
    }
    Polynomial g = Polynomial::from_terms(f.ring(), std::move(kept));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

namespace {

/// The shifted pair for one block: x_i -> x_{i+offset}, rebuilt in the
/// ambient ring.
std::vector<Polynomial> instantiate_pair(const BlockPair& pair,
                                         std::int32_t offset,
                                         const Ring& ambient) {
  auto shift = [offset](std::int32_t v) { return v + offset; };
  return {pair.first.remapped(ambient, shift),
          pair.second.remapped(ambient, shift)};
}

std::string describe_blocks(const std::vector<BlockWindows>& blocks,
                            const BlockPair& pair) {
  std::ostringstream out;
  out << "blocks: " << blocks.size() << " block(s) of " << (pair.t + 1)
      << " windows each, pair source " << pair.provenance;
  return out.str();
}

}  // namespace

AraCertificate construct_certificate(std::int32_t n, std::int32_t t,
                                     const ConstructOptions& options) {
  AraCertificate cert;
  cert.params = decompose_path(n, t);
  cert.formula_value = ara_formula(n, t);
  const Ring ambient(n, options.characteristic, options.order);
  const MonomialIdeal target = path_ideal(n, t, options.characteristic,
                                          options.order);
  {
    std::ostringstream step;
    step << "decompose: n=" << n << " = k*(t+1) + d with k=" << cert.params.k
         << ", d=" << cert.params.d;
    cert.steps.push_back(step.str());
  }

  std::optional<BlockPair> pair;
  if (cert.params.k > 0) {
    PairOptions popts = options.pairs;
    popts.characteristic = options.characteristic;
    popts.order = options.order;
    popts.gb = options.gb;
    try {
      pair = get_block_pair(t, popts);
      cert.pair_provenance = pair->provenance;
      cert.steps.push_back("pair: verified block pair for t=" +
                           std::to_string(t) + " via " + pair->provenance);
    } catch (const PairUnavailable&) {
      cert.steps.push_back("pair: unavailable for t=" + std::to_string(t) +
                           "; falling back to the path monomials");
    }
  }

  if (cert.params.k > 0 && !pair) {
    cert.degraded = true;
    cert.generators = target.generator_polynomials();
    std::ostringstream step;
    step << "degraded: emitting the " << cert.generators.size()
         << " path monomials; gap to formula value "
         << (static_cast<std::int64_t>(cert.generators.size()) -
             cert.formula_value);
    cert.steps.push_back(step.str());
  } else if (cert.params.d == t - 1) {
    auto blocks = block_windows(cert.params);
    cert.steps.push_back(describe_blocks(blocks, *pair));
    for (const auto& b : blocks) {
      for (auto& f : instantiate_pair(*pair, b.first_var - 1, ambient)) {
        cert.generators.push_back(std::move(f));
      }
    }
  } else if (cert.params.d < t - 1) {
    PaddingResult padding = padding_ideal(cert.params, options.characteristic,
                                          options.order);
    const MonomialIdeal extended_target = path_ideal(
        padding.extended_n, t, options.characteristic, options.order);
    {
      std::ostringstream step;
      step << "pad: extend to n'=" << padding.extended_n << " with windows {"
           << to_string(padding.ideal) << "}";
      cert.steps.push_back(step.str());
    }
    const MonomialIdeal target_in_extended(extended_target.ring(),
                                           target.generators());
    WitnessCheck witness =
        private_variable_witness(target_in_extended, padding.ideal);
    if (!witness.ok) {
      throw InvariantViolation(
          "padding lost its private-variable witness; this is a bug");
    }
    cert.steps.push_back(
        "padding check: every padding window carries a fresh variable");

    PathDecomposition extended = decompose_path(padding.extended_n, t);
    auto blocks = block_windows(extended);
    cert.steps.push_back(describe_blocks(blocks, *pair));
    const Ring extended_ring = extended_target.ring();
    std::vector<Polynomial> wide;
    for (const auto& b : blocks) {
      for (auto& f : instantiate_pair(*pair, b.first_var - 1, extended_ring)) {
        wide.push_back(std::move(f));
      }
    }
    std::vector<Polynomial> narrowed = strip_variables_above(wide, n);
    {
      std::ostringstream step;
      step << "project: dropped terms above x" << n << " ("
           << wide.size() << " -> " << narrowed.size() << " generators)";
      cert.steps.push_back(step.str());
    }
    for (auto& f : narrowed) {
      cert.generators.push_back(f.remapped(ambient, [](std::int32_t v) { return v; }));
    }
  } else {  // d == t
    auto blocks = block_windows(cert.params, /*allow_leftover=*/true);
    if (!blocks.empty()) cert.steps.push_back(describe_blocks(blocks, *pair));
    for (const auto& b : blocks) {
      for (auto& f : instantiate_pair(*pair, b.first_var - 1, ambient)) {
        cert.generators.push_back(std::move(f));
      }
    }
    Monomial leftover = window_monomial(n - t + 1, t);
    cert.steps.push_back("leftover: keep the final window " +
                         to_string(leftover));
    cert.generators.push_back(Polynomial::monomial(ambient, leftover));
  }

  cert.count = static_cast<std::int64_t>(cert.generators.size());

  const bool verify =
      options.verify == VerifyMode::on ||
      (options.verify == VerifyMode::automatic &&
       ((t == 2 && n <= 9) || cert.count <= 8));
  if (verify) {
    RadicalEqualityReport report =
        verify_radical_equality(cert.generators, target, options.gb);
    std::ostringstream step;
    step << "verify: " << (report.verdict ? "pass" : "FAIL") << " ("
         << report.checks.size() << " checks, " << report.passed()
         << " passed)";
    cert.steps.push_back(step.str());
    if (!report.verdict) {
      if (report.failed() == 0 && report.budgeted() > 0) {
        throw BudgetExceeded("verification",
                             "verification hit the Groebner budget for n=" +
                                 std::to_string(n) + ", t=" + std::to_string(t));
      }
      throw VerificationFailure(
          "radical-equality verification failed for n=" + std::to_string(n) +
          ", t=" + std::to_string(t) +
          "; the construction or the block pair is wrong");
    }
    cert.verification = std::move(report);
  } else {
    cert.steps.push_back("verify: skipped by policy");
  }

  if (options.compute_pd) {
    if (n <= options.betti_var_cap) {
      cert.pd_value = projective_dimension(target, options.characteristic,
                                           options.betti_var_cap);
      cert.steps.push_back("pd: " + std::to_string(*cert.pd_value) +
                           " over GF(" + std::to_string(options.characteristic) +
                           ")");
    } else {
      cert.steps.push_back("pd: skipped (variable cap)");
    }
  }

  if (cert.pd_value && cert.verification && cert.verification->verdict) {
    if (*cert.pd_value > cert.count) {
      throw InvariantViolation(
          "projective dimension exceeds a verified generator count");
    }
    if (!cert.degraded && cert.count_matches_formula() &&
        *cert.pd_value != cert.formula_value) {
      throw InvariantViolation(
          "formula value and projective dimension disagree on a verified "
          "construction");
    }
  }

  return cert;
}

}  // namespace arapath
