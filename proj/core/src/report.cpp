#include "extremal/report.hpp"

#include "extremal/errors.hpp"

namespace extremal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "not-applicable") return Verdict::not_applicable;
  if (s == "budget-exceeded") return Verdict::budget_exceeded;
  throw parameter_error("unknown verdict: " + s);
}

nlohmann::json VerdictReport::to_json() const {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["claim_id"] = claim_id;
  j["parameters"] = parameters;
  j["verdict"] = to_string(verdict);
  if (certificate_path) j["certificate_path"] = *certificate_path;
  if (!certificate.is_null()) j["certificate"] = certificate;
  j["seconds"] = seconds;
  return j;
}

VerdictReport VerdictReport::from_json(const nlohmann::json& j) {
  VerdictReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  if (j.contains("parameters")) r.parameters = j["parameters"];
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("certificate_path"))
    r.certificate_path = j["certificate_path"].get<std::string>();
  if (j.contains("certificate")) r.certificate = j["certificate"];
  if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
  return r;
}

Verdict worst_verdict(const std::vector<VerdictReport>& reports) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::pass: return 0;
      case Verdict::not_applicable: return 1;
      case Verdict::budget_exceeded: return 2;
      case Verdict::fail: return 3;
    }
    return 3;
  };
  Verdict worst = Verdict::pass;
  for (const VerdictReport& r : reports)
    if (rank(r.verdict) > rank(worst)) worst = r.verdict;
  return worst;
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
    case Verdict::not_applicable:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::budget_exceeded:
      return 3;
  }
  return 1;
}

}  // namespace extremal
