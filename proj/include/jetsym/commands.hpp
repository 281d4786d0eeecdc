#pragma once

// Check drivers shared by the command-line tool and suite manifests. A
// request is a JSON object with a "command" field and command-specific
// fields; the same object shape is used for manifest entries.

#include <string>
#include <vector>

#include <json.hpp>

#include "jetsym/report.hpp"

namespace jetsym {

struct RunOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  int max_jet_order = 12;
  double time_budget = 300.0;  // seconds per check
  std::string sign = "both";   // "+", "-" or "both"
  bool strict = false;
  int strict_trials = 50;
};

// Overrides from the request's own option fields.
RunOptions options_for(const nlohmann::json& request, const RunOptions& defaults);

// Never throws: failures become reports with exit code 2.
CheckReport run_check(const nlohmann::json& request, const RunOptions& defaults = {});

struct SuiteResult {
  std::vector<CheckReport> reports;  // manifest order
  nlohmann::json aggregate;
  int exit_code = 0;
};

// Manifest: {"schema": 1, "checks": [request, ...]}. Raises ManifestError
// on malformed input. Checks run on up to `jobs` threads.
SuiteResult run_suite(const nlohmann::json& manifest, const RunOptions& defaults = {}, int jobs = 1);
SuiteResult run_suite_file(const std::string& path, const RunOptions& defaults = {}, int jobs = 1);

}  // namespace jetsym
