#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "scene.hpp"
#include "tits/complexes.hpp"

namespace tits::cli {

enum class Verdict { Pass, Fail, HypothesesNotMet, Invalid };
std::string verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  std::string hypotheses = "MET";
  Verdict verdict = Verdict::Pass;
  nlohmann::json result = nlohmann::json::object();
  double seconds = 0;
  nlohmann::json to_json(bool timings) const;
};

// Names accepted by run_check, e.g. "verify solomon-tits" or "homology st".
const std::vector<std::string>& check_names();
CheckResult run_check(const Scene& scene, const std::string& name);

// Exit code for a list of results: 2 invalid, 1 fail, 3 hypotheses, 0 pass.
int exit_code(const std::vector<CheckResult>& results);

// Compares a result with a scene expectation entry; empty string when it matches.
std::string expectation_mismatch(const CheckResult& r, const nlohmann::json& expected);

nlohmann::json homology_json(const HomologySummary& h);

}  // namespace tits::cli
