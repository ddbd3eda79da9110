#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace extremal {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { pass, fail, not_applicable, budget_exceeded };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Machine-readable result of one verification run. Fail verdicts always
/// carry a certificate that `verify --replay` can re-evaluate.
struct VerdictReport {
  std::string claim_id;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  std::optional<std::string> certificate_path;
  nlohmann::json certificate = nlohmann::json();  // inline certificate payload
  double seconds = 0.0;

  nlohmann::json to_json() const;
  static VerdictReport from_json(const nlohmann::json& j);
};

/// Worst verdict of a sweep decides the aggregate exit status.
Verdict worst_verdict(const std::vector<VerdictReport>& reports);

/// Exit-status mapping: pass 0, fail 1, budget 3 (usage errors are 2).
int verdict_exit_code(Verdict v);

}  // namespace extremal
