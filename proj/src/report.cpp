#include "jetsym/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace jetsym {

std::string truncate_residual(const std::string& text, std::size_t limit) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit) + " ... [" + std::to_string(text.size() - limit) + " more characters]";
}

int exit_code_for(Outcome outcome, int trials, bool strict, int strict_trials) {
  switch (outcome) {
    case Outcome::ProvenZero:
      return 0;
    case Outcome::LikelyZero:
      return strict && trials < strict_trials ? 1 : 0;
    case Outcome::NonZero:
      return 1;
  }
  return 2;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["check"] = check;
  if (!label.empty()) j["name"] = label;
  j["fixtures"] = fixtures;
  j["parameters"] = parameters;
  j["verdict"] = verdict ? nlohmann::json(std::string(to_string(*verdict))) : nlohmann::json(nullptr);
  j["residual"] = residual;
  j["seconds"] = std::round(seconds * 1000.0) / 1000.0;
  j["trials"] = trials;
  j["seed"] = seed;
  j["branch"] = branch;
  if (!anchor.empty()) j["anchor"] = anchor;
  if (!note.empty()) j["note"] = note;
  if (error) j["error"] = {{"kind", error->kind}, {"message", error->message}};
  if (!details.empty()) j["details"] = details;
  j["exit_code"] = exit_code;
  return j;
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << (exit_code == 0 ? "PASS " : exit_code == 1 ? "FAIL " : "ERROR ");
  out << check;
  if (!label.empty()) out << " [" << label << "]";
  if (verdict) out << ": " << to_string(*verdict);
  if (!branch.empty()) out << " (branch " << branch << ")";
  if (error) out << ": " << error->kind << ": " << error->message;
  out << " in " << std::fixed << std::setprecision(3) << seconds << " s";
  return out.str();
}

}  // namespace jetsym
