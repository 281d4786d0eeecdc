#pragma once

// Structured check reports: one JSON object per check, plus a one-line
// human summary.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "jetsym/error.hpp"
#include "jetsym/zero_test.hpp"

namespace jetsym {

inline constexpr int kReportSchema = 1;
inline constexpr std::size_t kResidualLimit = 4000;

struct ReportError {
  std::string kind;
  std::string message;
};

struct CheckReport {
  std::string check;  // subcommand name
  std::string label;  // manifest entry name, if any
  std::map<std::string, std::string> fixtures;
  std::map<std::string, std::string> parameters;
  std::optional<Outcome> verdict;
  std::string residual;
  double seconds = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string branch;
  std::string anchor;
  std::string note;
  std::optional<ReportError> error;
  nlohmann::json details = nlohmann::json::object();
  int exit_code = 2;

  nlohmann::json to_json() const;
  std::string summary() const;
};

// Printed form cut to the size limit with a marker of the dropped length.
std::string truncate_residual(const std::string& text, std::size_t limit = kResidualLimit);

// 0 verified, 1 falsified. LikelyZero counts as verified unless strict mode
// asks for more trials than were run.
int exit_code_for(Outcome outcome, int trials, bool strict, int strict_trials);

}  // namespace jetsym
