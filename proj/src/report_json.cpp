#include "arapath/report_json.hpp"

#include "arapath/io.hpp"

namespace arapath {

ordered_json report_to_json(const RadicalEqualityReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json item;
    item["kind"] = c.kind;
    item["target"] = c.target;
    item["result"] = to_string(c.status);
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  ordered_json out;
  out["verdict"] = report.verdict;
  out["checks"] = std::move(checks);
  return out;
}

ordered_json certificate_to_json(const AraCertificate& cert) {
  ordered_json out;
  out["params"] = {{"n", cert.params.n},
                   {"t", cert.params.t},
                   {"k", cert.params.k},
                   {"d", cert.params.d}};
  ordered_json gens = ordered_json::array();
  for (const auto& g : cert.generators) gens.push_back(to_string(g));
  out["generators"] = std::move(gens);
  out["count"] = cert.count;
  out["formula"] = cert.formula_value;
  if (cert.pd_value) {
    out["pd"] = *cert.pd_value;
  } else {
    out["pd"] = nullptr;
  }
  out["degraded"] = cert.degraded;
  if (!cert.pair_provenance.empty()) out["pair_source"] = cert.pair_provenance;
  if (cert.verification) {
    out["verification"] = report_to_json(*cert.verification);
  } else {
    out["verification"] = nullptr;
  }
  out["steps"] = cert.steps;
  return out;
}

}  // namespace arapath
