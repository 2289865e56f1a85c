#ifndef ARAPATH_REPORT_JSON_HPP
#define ARAPATH_REPORT_JSON_HPP

#include <json.hpp>

#include "arapath/path.hpp"

namespace arapath {

using ordered_json = nlohmann::ordered_json;

/// Stable JSON schema (key order fixed, no timings):
/// {
///   "params": {"n":, "t":, "k":, "d":},
///   "generators": [<polynomial strings>],
///   "count":, "formula":, "pd": <int or null>,
///   "degraded": <bool>,
///   "verification": {"verdict":, "checks":[{"kind","target","result"}]} | null,
///   "steps": [<strings>]
/// }
ordered_json certificate_to_json(const AraCertificate& cert);

ordered_json report_to_json(const RadicalEqualityReport& report);

}  // namespace arapath

#endif
