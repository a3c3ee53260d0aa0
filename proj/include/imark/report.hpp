#pragma once

// JSON documents for certificates and censuses:
//   {"kind": "exact"|"almost", "preperiod": q, "period": p,
//    "exceptions": [...], "checked_prefix": L}
//   {"period": p, "preperiod_length": x, "exception_count": y,
//    "exception_positions": [...], "exception_residues": [...]}

#include <json.hpp>

#include "imark/periodicity.hpp"

namespace imark {

nlohmann::json to_json(const PeriodicityCertificate& cert);
nlohmann::json to_json(const ExceptionCensus& census);

PeriodicityCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace imark
