#include "jetsym/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "jetsym/catalog.hpp"
#include "jetsym/parser.hpp"

namespace jetsym {

namespace {

using nlohmann::json;

std::string printed(const Expr& e) {
  std::ostringstream out;
  out << e;
  return out.str();
}

std::string field(const json& request, const std::string& name) {
  auto it = request.find(name);
  if (it == request.end() || !it->is_string() || it->get<std::string>().empty()) {
    raise(ErrorKind::ManifestError, "missing field '" + name + "'");
  }
  return it->get<std::string>();
}

std::string optional_field(const json& request, const std::string& name) {
  auto it = request.find(name);
  return it != request.end() && it->is_string() ? it->get<std::string>() : std::string();
}

// One check in flight: context, catalog and the shared parameter map.
class Session {
 public:
  Session(const json& request, const RunOptions& options, CheckReport& report)
      : request_(request), options_(options), report_(report) {
    ctx_.max_jet_order = options.max_jet_order;
    if (auto it = request.find("params"); it != request.end()) {
      if (!it->is_object()) raise(ErrorKind::ManifestError, "'params' must be an object");
      for (const auto& [name, value] : it->items()) {
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        ctx_.declare_parameter(name);
        params_[name] = parse(text, ctx_);
        report_.parameters[name] = text;
      }
    }
  }

  Context& ctx() { return ctx_; }
  const Catalog& catalog() const { return catalog_; }

  ZeroTestOptions zero_options() const {
    ZeroTestOptions z;
    z.trials = options_.trials;
    z.seed = options_.seed;
    z.budget.seconds = options_.time_budget;
    return z;
  }

  FixtureKey key(const std::string& name, int sign = 0) const { return FixtureKey{name, params_, sign}; }

  bool is_fixture(const std::string& text, FixtureKind kind) const {
    return catalog_.contains(text) && catalog_.info(text).kind == kind;
  }

  // Records the resolved parameters of a fixture in the report.
  void note_fixture(const std::string& role, const std::string& name) {
    report_.fixtures[role] = name;
    const FixtureInfo& f = catalog_.info(name);
    if (report_.anchor.empty()) report_.anchor = f.anchor;
    for (const auto& p : f.parameters) {
      if (!report_.parameters.count(p.name)) report_.parameters[p.name] = p.fallback.get_str();
    }
  }

  EvolutionEquation equation(const std::string& role, const std::string& text) {
    if (is_fixture(text, FixtureKind::Equation)) {
      note_fixture(role, text);
      return catalog_.equation(ctx_, key(text));
    }
    report_.fixtures[role] = text;
    Expr rhs = parse(text, ctx_);
    std::string dep = optional_field(request_, "dependent");
    if (dep.empty()) {
      auto deps = dependents_of(rhs);
      dep = deps.size() == 1 ? deps.front() : "u";
    }
    return EvolutionEquation::make(ctx_, dep, rhs);
  }

  Expr expression(const std::string& text) { return parse(text, ctx_); }

  Verdict finish(const Residual& r) {
    report_.verdict = r.verdict.outcome;
    report_.trials = r.verdict.trials;
    report_.seed = r.verdict.seed;
    report_.note = r.verdict.note;
    report_.residual = truncate_residual(printed(r.expression));
    if (r.verdict.outcome == Outcome::NonZero && !r.verdict.witness.empty()) {
      report_.details["witness"] = r.verdict.witness;
      report_.details["witness_value"] = r.verdict.witness_value;
    }
    report_.exit_code = exit_code_for(r.verdict.outcome, r.verdict.trials, options_.strict, options_.strict_trials);
    return r.verdict;
  }

  std::vector<int> signs() const {
    if (options_.sign == "+") return {1};
    if (options_.sign == "-") return {-1};
    if (options_.sign == "both") return {0};
    raise(ErrorKind::ManifestError, "sign must be '+', '-' or 'both'");
  }

  const json& request() const { return request_; }
  const RunOptions& options() const { return options_; }
  CheckReport& report() { return report_; }

 private:
  const json& request_;
  const RunOptions& options_;
  CheckReport& report_;
  Context ctx_;
  Catalog catalog_;
  ParameterMap params_;
};

Expr adapt_candidate(const Expr& g, const std::string& dependent) {
  auto deps = dependents_of(g);
  if (deps.size() == 1 && deps.front() != dependent) return rename_jets(g, deps.front(), dependent);
  return g;
}

void check_symmetry(Session& s) {
  EvolutionEquation eq = s.equation("equation", field(s.request(), "eq"));
  std::string text = field(s.request(), "candidate");
  Expr g;
  if (s.is_fixture(text, FixtureKind::Symmetry)) {
    s.note_fixture("candidate", text);
    g = s.catalog().symmetry(s.ctx(), s.key(text));
  } else {
    s.report().fixtures["candidate"] = text;
    g = s.expression(text);
  }
  s.finish(symmetry_residual(s.ctx(), eq, adapt_candidate(g, eq.dependent), s.zero_options()));
}

struct MapSetup {
  MapFixture fixture;
  EvolutionEquation source;
  EvolutionEquation target;
};

MapSetup map_setup(Session& s) {
  std::string name = field(s.request(), "map");
  if (!s.is_fixture(name, FixtureKind::Map)) raise(ErrorKind::UnknownFixture, "unknown map '" + name + "'");
  const FixtureInfo& info = s.catalog().info(name);
  if (!info.enabled) {
    raise(ErrorKind::InvalidEquation, "verification of '" + name + "' is disabled: its target is not a scalar equation");
  }
  std::string src = optional_field(s.request(), "source");
  std::string tgt = optional_field(s.request(), "target");
  EvolutionEquation source = s.equation("source", src.empty() ? info.source : src);
  EvolutionEquation target = s.equation("target", tgt.empty() ? info.target : tgt);
  s.note_fixture("map", name);
  s.report().anchor = info.anchor;
  std::vector<MapBranch> branches;
  for (int sign : s.signs()) {
    MapFixture f = s.catalog().map(s.ctx(), s.key(name, sign));
    for (auto& b : f.branches) branches.push_back(std::move(b));
  }
  MapFixture fixture{&info, std::move(branches)};
  const Substitution& first = fixture.branches.front().substitution;
  source = rename_dependent(s.ctx(), source, first.source);
  target = rename_dependent(s.ctx(), target, first.target);
  return {std::move(fixture), std::move(source), std::move(target)};
}

// Runs every branch and reports the first verifying one.
template <class Residualize>
void run_branches(Session& s, const MapSetup& setup, Residualize residualize) {
  json branches = json::array();
  std::optional<Residual> chosen;
  std::string chosen_label;
  std::optional<Residual> first_failure;
  for (const auto& b : setup.fixture.branches) {
    Residual r = residualize(b.substitution);
    branches.push_back({{"branch", b.label}, {"verdict", std::string(to_string(r.verdict.outcome))}});
    if (r.verdict.zero() && !chosen) {
      chosen = r;
      chosen_label = b.label;
    }
    if (!r.verdict.zero() && !first_failure) first_failure = r;
  }
  if (setup.fixture.branches.size() > 1 || !setup.fixture.branches.front().label.empty()) {
    s.report().details["branches"] = branches;
  }
  if (chosen) {
    s.report().branch = chosen_label;
    s.finish(*chosen);
  } else {
    s.finish(*first_failure);
  }
}

void verify_map(Session& s) {
  MapSetup setup = map_setup(s);
  run_branches(s, setup, [&](const Substitution& sub) {
    return pushforward_residual(s.ctx(), sub, setup.source, setup.target, s.zero_options());
  });
}

void verify_implicit(Session& s) {
  if (s.request().contains("map")) {
    MapSetup setup = map_setup(s);
    run_branches(s, setup, [&](const Substitution& sub) {
      ImplicitRelation rel{Expr::jet(sub.target, 0) - sub.phi, Expr::jet(sub.target, 0)};
      return implicit_invariance_residual(s.ctx(), rel, setup.source, setup.target, s.zero_options());
    });
    return;
  }
  EvolutionEquation source = s.equation("source", field(s.request(), "source"));
  EvolutionEquation target = s.equation("target", field(s.request(), "target"));
  if (source.dependent == target.dependent) {
    source = rename_dependent(s.ctx(), source, "u");
    target = rename_dependent(s.ctx(), target, "v");
  }
  std::string rel = field(s.request(), "relation");
  s.report().fixtures["relation"] = rel;
  std::string pivot = optional_field(s.request(), "eliminate");
  Expr eliminate = pivot.empty() ? Expr::jet(target.dependent, 0) : s.expression(pivot);
  ImplicitRelation relation{s.expression(rel), eliminate};
  s.finish(implicit_invariance_residual(s.ctx(), relation, source, target, s.zero_options()));
}

void check_density(Session& s) {
  EvolutionEquation eq = s.equation("equation", field(s.request(), "eq"));
  std::string text = field(s.request(), "density");
  s.report().fixtures["density"] = text;
  Expr rho = adapt_candidate(s.expression(text), eq.dependent);
  s.finish(conserved_density_residual(s.ctx(), eq, rho, s.zero_options()));
}

void apply_recursion(Session& s) {
  std::string name = field(s.request(), "operator");
  if (!s.is_fixture(name, FixtureKind::Operator)) raise(ErrorKind::UnknownFixture, "unknown operator '" + name + "'");
  s.note_fixture("operator", name);
  PseudoDiffOperator op = s.catalog().op(s.ctx(), s.key(name));
  std::string arg = field(s.request(), "arg");
  s.report().fixtures["argument"] = arg;
  Expr value = s.expression(arg);
  int times = s.request().value("times", 1);
  json steps = json::array();
  for (int i = 0; i < times; ++i) {
    value = apply_psdo(s.ctx(), op, value, s.zero_options());
    steps.push_back(printed(value));
  }
  s.report().details["result"] = printed(value);
  s.report().details["steps"] = steps;
  std::string check = optional_field(s.request(), "check_eq");
  if (check.empty()) {
    s.report().exit_code = 0;
    return;
  }
  EvolutionEquation eq = s.equation("equation", check);
  s.finish(symmetry_residual(s.ctx(), eq, adapt_candidate(value, eq.dependent), s.zero_options()));
}

void euler(Session& s) {
  std::string text = field(s.request(), "expr");
  s.report().fixtures["expression"] = text;
  Expr e = s.expression(text);
  std::string dep = optional_field(s.request(), "dependent");
  if (dep.empty()) {
    auto deps = dependents_of(e);
    dep = deps.size() == 1 ? deps.front() : "u";
  }
  Expr variational = euler_operator(s.ctx(), e, dep);
  Residual r = make_residual(s.ctx(), variational, s.zero_options());
  s.report().details["euler"] = printed(r.expression);
  if (r.verdict.zero()) {
    try {
      s.report().details["antiderivative"] = printed(integrate_total(s.ctx(), e, dep, s.zero_options()));
    } catch (const Error& err) {
      s.report().details["antiderivative_error"] = std::string(to_string(err.kind())) + ": " + err.what();
    }
  }
  s.finish(r);
}

void ddx(Session& s) {
  std::string text = field(s.request(), "expr");
  s.report().fixtures["expression"] = text;
  int times = s.request().value("times", 1);
  Expr d = total_derivative(s.ctx(), s.expression(text), times);
  s.report().details["result"] = printed(canonicalize(s.ctx(), d));
  s.report().exit_code = 0;
}

void solve_ansatz(Session& s) {
  EvolutionEquation eq = s.equation("equation", field(s.request(), "eq"));
  auto it = s.request().find("basis");
  if (it == s.request().end()) raise(ErrorKind::ManifestError, "missing field 'basis'");
  std::vector<std::string> texts;
  if (it->is_array()) {
    for (const auto& b : *it) texts.push_back(b.get<std::string>());
  } else {
    std::stringstream in(it->get<std::string>());
    for (std::string part; std::getline(in, part, ',');) texts.push_back(part);
  }
  std::vector<Expr> basis;
  for (const auto& t : texts) basis.push_back(adapt_candidate(s.expression(t), eq.dependent));
  auto space = solve_linear_ansatz(s.ctx(), eq, basis);
  json solutions = json::array();
  std::optional<Residual> worst;
  for (const auto& v : space) {
    json coeffs = json::array();
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      coeffs.push_back(printed(v[i]));
      terms.push_back(v[i] * basis[i]);
    }
    solutions.push_back(coeffs);
    Residual r = symmetry_residual(s.ctx(), eq, Expr::sum(std::move(terms)), s.zero_options());
    if (!worst || !r.verdict.zero()) worst = r;
  }
  s.report().details["basis"] = texts;
  s.report().details["dimension"] = space.size();
  s.report().details["solutions"] = solutions;
  if (!worst) {
    s.report().verdict = Outcome::NonZero;
    s.report().note = "no nonzero combination is a symmetry";
    s.report().exit_code = 1;
    return;
  }
  s.finish(*worst);
}

void list_catalog(Session& s) {
  json out = json::array();
  for (const auto& f : s.catalog().list()) {
    json params = json::object();
    for (const auto& p : f.parameters) params[p.name] = p.fallback.get_str();
    json entry{{"name", f.name}, {"kind", std::string(to_string(f.kind))}, {"anchor", f.anchor},
               {"parameters", params}};
    if (f.kind == FixtureKind::Map) {
      entry["source"] = f.source;
      entry["target"] = f.target;
      entry["signed"] = f.signed_branches;
      entry["enabled"] = f.enabled;
    }
    out.push_back(entry);
  }
  s.report().details["fixtures"] = out;
  s.report().exit_code = 0;
}

}  // namespace

RunOptions options_for(const json& request, const RunOptions& defaults) {
  RunOptions o = defaults;
  o.trials = request.value("trials", o.trials);
  o.seed = request.value("seed", o.seed);
  o.max_jet_order = request.value("max_jet_order", o.max_jet_order);
  o.time_budget = request.value("time_budget", o.time_budget);
  o.sign = request.value("sign", o.sign);
  o.strict = request.value("strict", o.strict);
  o.strict_trials = request.value("strict_trials", o.strict_trials);
  return o;
}

CheckReport run_check(const json& request, const RunOptions& defaults) {
  CheckReport report;
  auto start = std::chrono::steady_clock::now();
  try {
    if (!request.is_object()) raise(ErrorKind::ManifestError, "check must be a JSON object");
    report.check = field(request, "command");
    report.label = optional_field(request, "name");
    RunOptions options = options_for(request, defaults);
    Session s(request, options, report);
    const std::string& c = report.check;
    if (c == "check-symmetry") {
      check_symmetry(s);
    } else if (c == "verify-map") {
      verify_map(s);
    } else if (c == "verify-implicit") {
      verify_implicit(s);
    } else if (c == "check-density") {
      check_density(s);
    } else if (c == "apply-recursion") {
      apply_recursion(s);
    } else if (c == "euler") {
      euler(s);
    } else if (c == "ddx") {
      ddx(s);
    } else if (c == "solve-ansatz") {
      solve_ansatz(s);
    } else if (c == "list-catalog") {
      list_catalog(s);
    } else {
      raise(ErrorKind::ManifestError, "unknown command '" + c + "'");
    }
  } catch (const Error& err) {
    report.error = ReportError{std::string(to_string(err.kind())), err.what()};
    report.verdict.reset();
    report.exit_code = 2;
  } catch (const std::exception& err) {
    report.error = ReportError{"InternalError", err.what()};
    report.verdict.reset();
    report.exit_code = 2;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteResult run_suite(const json& manifest, const RunOptions& defaults, int jobs) {
  if (!manifest.is_object()) raise(ErrorKind::ManifestError, "manifest must be a JSON object");
  if (manifest.value("schema", kReportSchema) != kReportSchema) {
    raise(ErrorKind::ManifestError, "unsupported manifest schema");
  }
  auto it = manifest.find("checks");
  if (it == manifest.end() || !it->is_array()) raise(ErrorKind::ManifestError, "manifest needs a 'checks' array");
  const json& checks = *it;
  RunOptions base = options_for(manifest.value("options", json::object()), defaults);

  SuiteResult result;
  result.reports.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) result.reports[i] = run_check(checks[i], base);
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int passed = 0;
  int failed = 0;
  int errors = 0;
  for (const auto& r : result.reports) {
    if (r.exit_code == 0) {
      ++passed;
    } else if (r.exit_code == 1) {
      ++failed;
    } else {
      ++errors;
    }
  }
  result.exit_code = errors > 0 ? 2 : failed > 0 ? 1 : 0;
  result.aggregate = {{"schema", kReportSchema},
                      {"suite", manifest.value("name", std::string())},
                      {"checks", checks.size()},
                      {"passed", passed},
                      {"falsified", failed},
                      {"errors", errors},
                      {"exit_code", result.exit_code}};
  return result;
}

SuiteResult run_suite_file(const std::string& path, const RunOptions& defaults, int jobs) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ManifestError, "cannot open manifest '" + path + "'");
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& err) {
    raise(ErrorKind::ManifestError, std::string("malformed manifest: ") + err.what());
  }
  return run_suite(manifest, defaults, jobs);
}

}  // namespace jetsym
