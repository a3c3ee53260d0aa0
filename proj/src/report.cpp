#include "imark/report.hpp"

namespace imark {

nlohmann::json to_json(const PeriodicityCertificate& cert) {
  return {
      {"kind", cert.exact() ? "exact" : "almost"},
      {"preperiod", cert.preperiod},
      {"period", cert.period},
      {"exceptions", cert.exceptions},
      {"checked_prefix", cert.checked_prefix},
  };
}

nlohmann::json to_json(const ExceptionCensus& census) {
  return {
      {"period", census.period},
      {"preperiod_length", census.preperiod_length},
      {"exception_count", census.exception_count()},
      {"exception_positions", census.exception_positions},
      {"exception_residues", census.exception_residues},
  };
}

PeriodicityCertificate certificate_from_json(const nlohmann::json& doc) {
  PeriodicityCertificate cert;
  cert.preperiod = doc.at("preperiod").get<std::size_t>();
  cert.period = doc.at("period").get<std::size_t>();
  cert.exceptions = doc.at("exceptions").get<std::vector<std::size_t>>();
  cert.checked_prefix = doc.at("checked_prefix").get<std::size_t>();
  return cert;
}

}  // namespace imark
