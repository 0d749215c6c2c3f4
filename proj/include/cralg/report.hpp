#ifndef CRALG_REPORT_HPP
#define CRALG_REPORT_HPP

#include <string>

#include "cralg/parser.hpp"
#include "cralg/pipeline.hpp"
#include "cralg/tangent_fields.hpp"

namespace cralg {

inline constexpr int kReportSchemaVersion = 1;

// Deterministic JSON reports: exact rationals as strings "a/b" and
// "a/b+c/d*i", polynomials as term lists, fixed key order.
std::string emit_report(const GenericityReport& r);
std::string emit_report(const LeviData& levi, const LeviConeResult& cone);
std::string emit_report(const std::vector<TangentOperator>& ops);
std::string emit_report(const LiftedFieldsResult& lifted, const SegreVariety& S);
std::string emit_report(const HypothesisReport& r);
std::string emit_report(const ExtensionCertificate& c);
std::string emit_report(const Annihilator& a);
std::string emit_report(const SeparateCertificate& c);

// {"status": <status>, ...} for not-found / failure outcomes.
std::string emit_status(const std::string& status, const std::string& message,
                        const std::vector<std::pair<std::string, std::string>>& extra = {});

}  // namespace cralg

#endif
