// jetsym: command-line verification driver. Prints one JSON report per
// check on stdout and a summary line per check on stderr. Exit codes:
// 0 verified, 1 falsified, 2 error or unsupported.

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetsym/commands.hpp"

namespace {

using nlohmann::json;

int emit_error(const std::string& kind, const std::string& message) {
  json j{{"schema", jetsym::kReportSchema}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", 2}};
  std::cout << j.dump() << std::endl;
  std::cerr << "ERROR " << kind << ": " << message << std::endl;
  return 2;
}

// Leftover "--name value" and "--name=value" pairs become fixture parameters.
json collect_parameters(const std::vector<std::string>& extras, const std::vector<std::string>& assignments) {
  json params = json::object();
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad --param '" + a + "'");
    params[a.substr(0, eq)] = a.substr(eq + 1);
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& flag = extras[i];
    if (flag.rfind("--", 0) != 0 || flag.size() < 3) throw std::invalid_argument("unexpected argument '" + flag + "'");
    std::string name = flag.substr(2);
    auto eq = name.find('=');
    if (eq != std::string::npos) {
      params[name.substr(0, eq)] = name.substr(eq + 1);
      continue;
    }
    if (i + 1 >= extras.size()) throw std::invalid_argument("parameter '" + flag + "' needs a value");
    params[name] = extras[++i];
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic verification of symmetries and differential substitutions of evolution equations"};
  app.require_subcommand(1);
  app.allow_extras();
  app.fallthrough();

  jetsym::RunOptions options;
  std::vector<std::string> assignments;
  app.add_option("--trials", options.trials, "Random trials of the zero test")->capture_default_str();
  app.add_option("--seed", options.seed, "Seed of the zero test")->capture_default_str();
  app.add_option("--max-jet-order", options.max_jet_order, "Highest jet order allowed")->capture_default_str();
  app.add_option("--time-budget", options.time_budget, "Seconds of symbolic work per check")->capture_default_str();
  app.add_option("--sign", options.sign, "Sign branch: +, - or both")
      ->check(CLI::IsMember({"+", "-", "both"}))
      ->capture_default_str();
  app.add_flag("--strict", options.strict, "Count LikelyZero as falsified below the strict trial threshold");
  app.add_option("--strict-trials", options.strict_trials, "Trials needed for LikelyZero in strict mode")
      ->capture_default_str();
  app.add_option("--param", assignments, "Fixture parameter name=value (also accepted as --name value)");

  json request = json::object();
  auto text = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help,
                  bool required) {
    auto* opt = sub->add_option_function<std::string>(
        flag, [&request, key](const std::string& v) { request[key] = v; }, help);
    if (required) opt->required();
  };

  auto* sym = app.add_subcommand("check-symmetry", "Check a candidate generalized symmetry");
  text(sym, "--eq", "eq", "Equation fixture or right-hand side", true);
  text(sym, "--candidate", "candidate", "Symmetry fixture or expression", true);

  auto* vmap = app.add_subcommand("verify-map", "Verify a differential substitution between two equations");
  text(vmap, "--map", "map", "Map fixture", true);
  text(vmap, "--source", "source", "Override the source equation", false);
  text(vmap, "--target", "target", "Override the target equation", false);

  auto* impl = app.add_subcommand("verify-implicit", "Invariance test of an implicit relation");
  text(impl, "--relation", "relation", "Relation Phi(u-jets; v-jets) = 0", false);
  text(impl, "--eliminate", "eliminate", "Jet variable solved from the relation (default v)", false);
  text(impl, "--map", "map", "Use v - Phi = 0 from a map fixture instead", false);
  text(impl, "--source", "source", "Source equation", false);
  text(impl, "--target", "target", "Target equation", false);

  auto* dens = app.add_subcommand("check-density", "Check a conserved density with the Euler operator");
  text(dens, "--eq", "eq", "Equation fixture or right-hand side", true);
  text(dens, "--density", "density", "Density expression", true);

  auto* rec = app.add_subcommand("apply-recursion", "Apply a recursion operator");
  text(rec, "--operator", "operator", "Operator fixture", true);
  text(rec, "--arg", "arg", "Argument expression", true);
  text(rec, "--check-eq", "check_eq", "Check the result as a symmetry of this equation", false);
  rec->add_option_function<int>("--times", [&](const int& n) { request["times"] = n; }, "Repetitions");

  auto* eul = app.add_subcommand("euler", "Euler operator and total-derivative test");
  text(eul, "--expr", "expr", "Expression", true);
  text(eul, "--dependent", "dependent", "Dependent variable", false);

  auto* dx = app.add_subcommand("ddx", "Total x-derivative");
  text(dx, "--expr", "expr", "Expression", true);
  dx->add_option_function<int>("--times", [&](const int& n) { request["times"] = n; }, "Order");

  auto* ans = app.add_subcommand("solve-ansatz", "Solve for symmetries in the span of a basis");
  text(ans, "--eq", "eq", "Equation fixture or right-hand side", true);
  text(ans, "--basis", "basis", "Comma-separated basis expressions", true);

  app.add_subcommand("list-catalog", "List fixtures");

  std::string manifest;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* suite = app.add_subcommand("run-suite", "Run every check of a manifest");
  suite->add_option("manifest", manifest, "Manifest file")->required();
  suite->add_option("--jobs", jobs, "Checks run concurrently")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what());
  }

  try {
    json params = collect_parameters(app.remaining(), assignments);
    if (!params.empty()) request["params"] = params;
  } catch (const std::exception& e) {
    return emit_error("UsageError", e.what());
  }

  if (suite->parsed()) {
    try {
      jetsym::SuiteResult result = jetsym::run_suite_file(manifest, options, jobs);
      for (const auto& r : result.reports) {
        std::cout << r.to_json().dump() << "\n";
        std::cerr << r.summary() << "\n";
      }
      std::cout << result.aggregate.dump() << std::endl;
      std::cerr << result.aggregate["passed"] << " passed, " << result.aggregate["falsified"] << " falsified, "
                << result.aggregate["errors"] << " errors" << std::endl;
      return result.exit_code;
    } catch (const jetsym::Error& e) {
      return emit_error(std::string(jetsym::to_string(e.kind())), e.what());
    }
  }

  request["command"] = app.get_subcommands().front()->get_name();
  jetsym::CheckReport report = jetsym::run_check(request, options);
  std::cout << report.to_json().dump() << std::endl;
  std::cerr << report.summary() << std::endl;
  return report.exit_code;
}
