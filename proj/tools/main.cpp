// arapath: constructs small generating sets (up to radical) for path
// ideals, certifies them with exact Groebner checks, and cross-checks the
// closed-form count against the projective dimension from Hochster's
// formula.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 degraded construction,
// 4 verification failure / equality violation, 5 resource cap.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "arapath/io.hpp"
#include "arapath/path.hpp"
#include "arapath/report_json.hpp"

namespace {

using namespace arapath;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegraded = 3;
constexpr int kExitVerification = 4;
constexpr int kExitBudget = 5;

struct Range {
  std::int32_t lo = 0;
  std::int32_t hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    throw ParseError("bad range '" + text + "', expected N or LO..HI", 0);
  }
  if (r.hi < r.lo) throw ParseError("empty range '" + text + "'", 0);
  return r;
}

GroebnerBudgets budgets_from_env() {
  GroebnerBudgets budgets;
  if (const char* env = std::getenv("ARA_PATH_BUDGET")) {
    try {
      budgets.max_pair_reductions = static_cast<std::size_t>(std::stoll(env));
    } catch (...) {
      throw ParseError("ARA_PATH_BUDGET must be an integer", 0);
    }
  }
  return budgets;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VerifyMode parse_verify_mode(const std::string& text) {
  if (text == "auto") return VerifyMode::automatic;
  if (text == "on") return VerifyMode::on;
  if (text == "off") return VerifyMode::off;
  throw ParseError("verify policy must be auto|on|off", 0);
}

// ---------------------------------------------------------------- gen --

int cmd_gen(std::int32_t n, std::int32_t t, std::uint32_t p,
            const std::string& format, const std::string& out_path) {
  MonomialIdeal ideal = path_ideal(n, t, p);
  std::string content;
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["t"] = t;
    ordered_json gens = ordered_json::array();
    for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
    j["generators"] = std::move(gens);
    content = j.dump(2) + "\n";
  } else {
    content = to_string(ideal) + "\n";
  }
  write_output(out_path, content);
  return kExitOk;
}

// ---------------------------------------------------------- construct --

int cmd_construct(std::int32_t n, std::int32_t t, const ConstructOptions& opts,
                  bool as_json, const std::string& out_path) {
  AraCertificate cert = construct_certificate(n, t, opts);
  std::string content;
  if (as_json) {
    content = certificate_to_json(cert).dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "path ideal: n=" << n << ", t=" << t << " (k=" << cert.params.k
        << ", d=" << cert.params.d << ")\n";
    out << "generators (" << cert.count << "; formula " << cert.formula_value
        << "):\n";
    for (const auto& g : cert.generators) out << "  " << to_string(g) << "\n";
    if (cert.pd_value) out << "pd: " << *cert.pd_value << "\n";
    if (cert.verification) {
      out << "verification: "
          << (cert.verification->verdict ? "pass" : "fail") << " ("
          << cert.verification->checks.size() << " checks)\n";
    } else {
      out << "verification: skipped\n";
    }
    out << "steps:\n";
    for (const auto& s : cert.steps) out << "  - " << s << "\n";
    content = out.str();
  }
  write_output(out_path, content);
  return cert.degraded ? kExitDegraded : kExitOk;
}

// ----------------------------------------------------------------- pd --

int cmd_pd(std::optional<std::int32_t> n, std::optional<std::int32_t> t,
           const std::string& ideal_text, const std::string& ideal_file,
           std::uint32_t p, std::int32_t cap) {
  MonomialIdeal ideal = [&] {
    if (n && t) return path_ideal(*n, *t, p);
    std::string text = ideal_text;
    if (!ideal_file.empty()) text = read_file(ideal_file);
    if (text.empty()) {
      throw ParseError("pd needs --n/--t or --ideal/--ideal-file", 0);
    }
    // parse against a ring wide enough for any mentioned index
    std::int32_t max_var = 1;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        std::int32_t v = 0;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + (text[j] - '0');
          ++j;
        }
        max_var = std::max(max_var, v);
      }
    }
    return parse_ideal(text, Ring(max_var, p));
  }();
  std::cout << projective_dimension(ideal, p, cap) << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- table --

struct TableRow {
  std::int32_t n = 0, t = 0, k = 0, d = 0;
  std::int64_t formula = 0;
  std::optional<std::int32_t> pd;
  std::int64_t count = 0;
  std::string verified;  // pass | skipped | skipped(budget) | degraded
  double millis = 0.0;
};

TableRow run_table_row(std::int32_t n, std::int32_t t,
                       const ConstructOptions& opts) {
  TableRow row;
  row.n = n;
  row.t = t;
  auto start = std::chrono::steady_clock::now();
  try {
    AraCertificate cert = construct_certificate(n, t, opts);
    row.k = cert.params.k;
    row.d = cert.params.d;
    row.formula = cert.formula_value;
    row.pd = cert.pd_value;
    row.count = cert.count;
    if (cert.degraded) {
      row.verified = "degraded";
    } else if (cert.verification) {
      row.verified = cert.verification->verdict ? "pass" : "fail";
    } else {
      row.verified = "skipped";
    }
  } catch (const BudgetExceeded&) {
    PathDecomposition dec = decompose_path(n, t);
    row.k = dec.k;
    row.d = dec.d;
    row.formula = ara_formula(n, t);
    row.count = 0;
    row.verified = "skipped(budget)";
  }
  row.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

int cmd_table(const Range& trange, const Range& nrange,
              const ConstructOptions& base_opts, const std::string& format,
              const std::string& out_path, bool timings) {
  std::vector<std::pair<std::int32_t, std::int32_t>> params;  // (t, n)
  for (std::int32_t t = trange.lo; t <= trange.hi; ++t) {
    for (std::int32_t n = std::max(nrange.lo, t); n <= nrange.hi; ++n) {
      params.push_back({t, n});
    }
  }

  // bounded worker pool; results assembled in (t, n) order regardless of
  // completion order
  const std::size_t pool =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<TableRow> rows(params.size());
  std::vector<std::future<TableRow>> inflight;
  std::size_t next = 0, done = 0;
  while (done < params.size()) {
    while (next < params.size() && inflight.size() < pool) {
      auto [t, n] = params[next++];
      inflight.push_back(std::async(std::launch::async, run_table_row, n, t,
                                    std::cref(base_opts)));
    }
    rows[done] = inflight.front().get();
    inflight.erase(inflight.begin());
    ++done;
  }

  std::size_t eq_rows = 0, pass_rows = 0, pd_rows = 0;
  for (const auto& r : rows) {
    if (r.pd) {
      ++pd_rows;
      if (*r.pd == r.formula) ++eq_rows;
    }
    if (r.verified == "pass") ++pass_rows;
  }
  const bool violation = eq_rows != pd_rows;

  std::string content;
  if (format == "json") {
    ordered_json j;
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json jr;
      jr["n"] = r.n;
      jr["t"] = r.t;
      jr["k"] = r.k;
      jr["d"] = r.d;
      jr["formula"] = r.formula;
      if (r.pd) {
        jr["pd"] = *r.pd;
      } else {
        jr["pd"] = nullptr;
      }
      jr["count"] = r.count;
      jr["verified"] = r.verified;
      if (timings) jr["millis"] = r.millis;
      jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    j["summary"] = {{"rows", rows.size()},
                    {"formula_eq_pd", eq_rows},
                    {"pd_computed", pd_rows},
                    {"verified_pass", pass_rows}};
    content = j.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream out;
    out << "n,t,k,d,formula,pd,count,verified\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.t << ',' << r.k << ',' << r.d << ',' << r.formula
          << ',';
      if (r.pd) out << *r.pd;
      out << ',' << r.count << ',' << r.verified << "\n";
    }
    content = out.str();
  } else {
    std::ostringstream out;
    out << "   n   t   k   d  formula   pd  count  verified\n";
    for (const auto& r : rows) {
      char line[160];
      std::snprintf(line, sizeof(line), "%4d %3d %3d %3d %8lld %4s %6lld  %s",
                    r.n, r.t, r.k, r.d, static_cast<long long>(r.formula),
                    r.pd ? std::to_string(*r.pd).c_str() : "-",
                    static_cast<long long>(r.count), r.verified.c_str());
      out << line;
      if (timings) out << "  (" << static_cast<long long>(r.millis) << " ms)";
      out << "\n";
    }
    out << "summary: " << eq_rows << "/" << pd_rows
        << " rows match formula = pd; " << pass_rows
        << " verified pass out of " << rows.size() << " rows\n";
    content = out.str();
  }
  write_output(out_path, content);
  return violation ? kExitVerification : kExitOk;
}

// -------------------------------------------------------------- verify --

int cmd_verify(const std::string& gens_path, const std::string& gens_text,
               const std::string& ideal_path, const std::string& ideal_text,
               std::uint32_t p, const GroebnerBudgets& gb) {
  std::string ideal_src = ideal_text.empty() ? read_file(ideal_path) : ideal_text;
  std::string gens_src = gens_text.empty() ? read_file(gens_path) : gens_text;

  std::int32_t max_var = 1;
  for (const std::string* src : {&ideal_src, &gens_src}) {
    for (std::size_t i = 0; i + 1 < src->size(); ++i) {
      if ((*src)[i] == 'x' &&
          std::isdigit(static_cast<unsigned char>((*src)[i + 1]))) {
        std::int32_t v = 0;
        std::size_t j = i + 1;
        while (j < src->size() &&
               std::isdigit(static_cast<unsigned char>((*src)[j]))) {
          v = v * 10 + ((*src)[j] - '0');
          ++j;
        }
        max_var = std::max(max_var, v);
      }
    }
  }
  Ring ring(max_var, p);
  MonomialIdeal target = parse_ideal(ideal_src, ring);

  std::vector<Polynomial> candidates;
  std::string piece;
  std::replace(gens_src.begin(), gens_src.end(), '\n', '|');
  std::stringstream stream(gens_src);
  while (std::getline(stream, piece, '|')) {
    bool blank = true;
    for (char c : piece) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    candidates.push_back(parse_polynomial(piece, ring));
  }

  RadicalEqualityReport report = verify_radical_equality(candidates, target, gb);
  for (const auto& c : report.checks) {
    std::cout << c.kind << "  " << c.target << "  " << to_string(c.status)
              << "\n";
  }
  std::cout << "verdict: " << (report.verdict ? "pass" : "fail") << "\n";
  if (report.budgeted() > 0 && !report.verdict && report.failed() == 0) {
    return kExitBudget;
  }
  return report.verdict ? kExitOk : kExitVerification;
}

// --------------------------------------------------------- search-pair --

int cmd_search_pair(std::int32_t t, std::size_t budget, std::uint32_t p,
                    const GroebnerBudgets& gb) {
  PairSearchLimits limits;
  limits.max_verifications = budget;
  auto pair = search_block_pair(t, limits, p, OrderKind::degrevlex, gb);
  if (pair) {
    std::cout << pair_config_line(*pair) << "\n";
    return kExitOk;
  }
  std::cout << "none within budget\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arapath: certified small generating sets (up to radical) and "
      "projective dimensions for path ideals"};
  app.require_subcommand(1);

  std::uint32_t characteristic = kDefaultCharacteristic;
  app.add_option("--char", characteristic, "field characteristic (prime)")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "print the generators of a path ideal");
  std::int32_t gen_n = 0, gen_t = 0;
  std::string gen_format = "text", gen_out;
  gen->add_option("--n", gen_n, "path length")->required();
  gen->add_option("--t", gen_t, "window length")->required();
  gen->add_option("--format", gen_format, "text|json")->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // construct
  auto* con = app.add_subcommand(
      "construct", "build and optionally certify a small generating set");
  std::int32_t con_n = 0, con_t = 0;
  bool con_verify = false, con_no_verify = false, con_json = false;
  bool con_search = false;
  std::string con_pairs, con_out;
  std::size_t con_search_budget = PairSearchLimits{}.max_verifications;
  con->add_option("--n", con_n, "path length")->required();
  con->add_option("--t", con_t, "window length")->required();
  con->add_flag("--verify", con_verify, "force verification on");
  con->add_flag("--no-verify", con_no_verify, "force verification off");
  con->add_flag("--json", con_json, "emit JSON");
  con->add_option("--pairs", con_pairs, "block-pair config file");
  con->add_flag("--search", con_search,
                "allow a bounded pair search when builtin/config fail");
  con->add_option("--search-budget", con_search_budget,
                  "max certifier runs during pair search")
      ->capture_default_str();
  con->add_option("--out", con_out, "output file (default stdout)");

  // pd
  auto* pdc = app.add_subcommand(
      "pd", "projective dimension of R/I via Hochster's formula");
  std::int32_t pd_n = -1, pd_t = -1, pd_cap = kDefaultBettiVarCap;
  std::string pd_ideal, pd_ideal_file;
  pdc->add_option("--n", pd_n, "path length");
  pdc->add_option("--t", pd_t, "window length");
  pdc->add_option("--ideal", pd_ideal, "inline ideal text, e.g. 'x1x2; x2x3'");
  pdc->add_option("--ideal-file", pd_ideal_file, "file with ideal text");
  pdc->add_option("--cap", pd_cap, "variable cap")->capture_default_str();

  // table
  auto* tab = app.add_subcommand(
      "table", "formula vs projective dimension across a parameter grid");
  std::string tab_t = "2", tab_n, tab_format = "human", tab_out,
              tab_verify = "auto";
  bool tab_timings = false;
  tab->add_option("--t", tab_t, "t value or range LO..HI")->capture_default_str();
  tab->add_option("--n", tab_n, "n value or range LO..HI")->required();
  tab->add_option("--format", tab_format, "human|json|csv")->capture_default_str();
  tab->add_option("--verify", tab_verify, "verification policy auto|on|off")
      ->capture_default_str();
  tab->add_option("--out", tab_out, "output file (default stdout)");
  tab->add_flag("--timings", tab_timings, "include per-row timings");
  std::string tab_pairs;
  tab->add_option("--pairs", tab_pairs, "block-pair config file");
  bool tab_search = false;
  tab->add_flag("--search", tab_search, "allow pair search for missing t");

  // verify
  auto* ver = app.add_subcommand(
      "verify", "radical-equality check of generators against a monomial ideal");
  std::string ver_gens, ver_gens_text, ver_ideal, ver_ideal_text;
  ver->add_option("--gens", ver_gens, "file with polynomials separated by '|'");
  ver->add_option("--gens-text", ver_gens_text, "inline polynomials");
  ver->add_option("--ideal", ver_ideal, "file with the target monomial ideal");
  ver->add_option("--ideal-text", ver_ideal_text, "inline target ideal");

  // search-pair
  auto* sp = app.add_subcommand("search-pair",
                                "bounded search for a verified block pair");
  std::int32_t sp_t = 0;
  std::size_t sp_budget = PairSearchLimits{}.max_verifications;
  sp->add_option("--t", sp_t, "block parameter")->required();
  sp->add_option("--budget", sp_budget, "max certifier runs")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    GroebnerBudgets gb = budgets_from_env();

    if (gen->parsed()) {
      return cmd_gen(gen_n, gen_t, characteristic, gen_format, gen_out);
    }
    if (con->parsed()) {
      ConstructOptions opts;
      opts.characteristic = characteristic;
      opts.gb = gb;
      opts.pairs.gb = gb;
      if (con_verify) opts.verify = VerifyMode::on;
      if (con_no_verify) opts.verify = VerifyMode::off;
      opts.pairs.config_path = con_pairs;
      opts.pairs.search.max_verifications = con_search_budget;
      opts.pairs.sources = {PairSource::builtin, PairSource::config};
      if (con_search) opts.pairs.sources.push_back(PairSource::search);
      return cmd_construct(con_n, con_t, opts, con_json, con_out);
    }
    if (pdc->parsed()) {
      std::optional<std::int32_t> n, t;
      if (pd_n >= 0) n = pd_n;
      if (pd_t >= 0) t = pd_t;
      return cmd_pd(n, t, pd_ideal, pd_ideal_file, characteristic, pd_cap);
    }
    if (tab->parsed()) {
      ConstructOptions opts;
      opts.characteristic = characteristic;
      opts.gb = gb;
      opts.pairs.gb = gb;
      opts.verify = parse_verify_mode(tab_verify);
      opts.pairs.config_path = tab_pairs;
      opts.pairs.sources = {PairSource::builtin, PairSource::config};
      if (tab_search) opts.pairs.sources.push_back(PairSource::search);
      return cmd_table(parse_range(tab_t), parse_range(tab_n), opts, tab_format,
                       tab_out, tab_timings);
    }
    if (ver->parsed()) {
      return cmd_verify(ver_gens, ver_gens_text, ver_ideal, ver_ideal_text,
                        characteristic, gb);
    }
    if (sp->parsed()) {
      return cmd_search_pair(sp_t, sp_budget, characteristic, gb);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RingMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
