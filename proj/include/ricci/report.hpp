#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/rational.hpp"
#include "ricci/search.hpp"
#include "ricci/verifiers.hpp"

namespace ricci {

inline constexpr std::string_view kToolVersion = "1.0.0";

// Rationals travel as {"num": n, "den": d}. Components beyond 2^53 in
// magnitude are written as decimal strings so no reader rounds them.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurvatureReport& r, bool with_witness);
CurvatureReport curvature_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerifierVerdict& v);
VerifierVerdict verdict_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatchingCertificate& c);
nlohmann::json to_json(const HypercubeLabeling& l);
nlohmann::json to_json(const BoundComparison& b);
nlohmann::json to_json(const ScanRecord& r);
nlohmann::json to_json(const ScanSummary& s);
nlohmann::json to_json(const C5PowerReport& r);

struct ReportDocument {
  std::string version{kToolVersion};
  nlohmann::json input = nlohmann::json::object();
  std::vector<CurvatureReport> curvature;
  bool with_witness = false;
  std::vector<VerifierVerdict> verdicts;
  nlohmann::json extra = nlohmann::json::object();  // command-specific sections
};

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

void json_report_write(const ReportDocument& doc, std::ostream& sink);

}  // namespace ricci
