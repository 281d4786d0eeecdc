#include "jetsym/context.hpp"

#include "jetsym/calculus.hpp"
#include "jetsym/error.hpp"

namespace jetsym {

std::pair<std::string, int> split_primes(const std::string& name) {
  std::size_t end = name.size();
  while (end > 0 && name[end - 1] == '\'') --end;
  return {name.substr(0, end), static_cast<int>(name.size() - end)};
}

Context::Context() {
  for (const char* dep : {"u", "v", "w"}) dependents_.insert(dep);
  const Expr h = placeholder();
  declare_closed("exp", Expr::function("exp", h));
  declare_closed("ln", pow(h, -1));
  declare_closed("tan", 1 + pow(Expr::function("tan", h), 2));
  declare_closed("tanh", 1 - pow(Expr::function("tanh", h), 2));
}

Expr Context::placeholder() {
  static const Expr h = Expr::parameter("#");
  return h;
}

Expr Context::apply_template(const Expr& tmpl, const Expr& argument) {
  return substitute(tmpl, Bindings{{placeholder(), argument}});
}

void Context::declare_dependent(const std::string& name) { dependents_.insert(name); }

void Context::declare_parameter(const std::string& name) { parameters_.insert(name); }

void Context::declare_fresh(const std::string& name) {
  FunctionSymbol s;
  s.name = name;
  s.rule = DerivativeRule::FreshChain;
  functions_[name] = std::move(s);
}

void Context::declare_closed(const std::string& name, Expr derivative,
                             std::optional<Relation> relation) {
  FunctionSymbol s;
  s.name = name;
  s.rule = DerivativeRule::ClosedForm;
  s.derivative = std::move(derivative);
  s.relation = std::move(relation);
  functions_[name] = std::move(s);
}

void Context::declare_weierstrass(const Expr& g2, const Expr& g3, const std::string& name) {
  const Expr h = placeholder();
  const std::string prime = name + "'";
  Expr wp = Expr::function(name, h);
  declare_closed(name, Expr::function(prime, h));
  declare_closed(prime, 6 * pow(wp, 2) - g2 / 2,
                 Relation{Expr(0L), -(4 * pow(wp, 3) - g2 * wp - g3)});
}

void Context::declare_half_weierstrass(const Expr& g2, const Expr& g3, const std::string& p,
                                       const std::string& q) {
  const Expr h = placeholder();
  Expr pe = Expr::function(p, h);
  Expr qe = Expr::function(q, h);
  declare_closed(p, qe / 2);
  declare_closed(q, 3 * pow(pe, 2) - g2 / 4,
                 Relation{Expr(0L), -(4 * pow(pe, 3) - g2 * pe - g3)});
}

void Context::declare_quadratic_root(const std::string& name, const Expr& a, const Expr& b,
                                     const Expr& c, const std::string& wp) {
  const Expr h = placeholder();
  Expr root = Expr::function(name, h);
  Expr w = Expr::function(wp, h);
  Expr wprime = Expr::function(wp + "'", h);
  Expr middle = Rational(3, 2) * w + c;
  declare_closed(name, Expr(Rational(-3, 2)) * wprime * root / (2 * a * root + middle),
                 Relation{middle / a, b / a});
}

bool Context::is_dependent(const std::string& name) const { return dependents_.count(name) > 0; }

bool Context::is_parameter(const std::string& name) const {
  return parameters_.count(name) > 0 || !strict_parameters;
}

const FunctionSymbol* Context::find(const std::string& name) const {
  auto it = functions_.find(name);
  if (it != functions_.end()) return &it->second;
  auto [base, primes] = split_primes(name);
  it = functions_.find(base);
  if (it != functions_.end() && primes > 0) return &it->second;
  return nullptr;
}

bool Context::knows_function(const std::string& name) const { return find(name) != nullptr; }

Expr Context::apply(const std::string& name, const Expr& argument) const {
  const FunctionSymbol* sym = find(name);
  if (sym == nullptr) raise(ErrorKind::UnknownSymbol, "unknown function '" + name + "'");
  if (sym->name == name || sym->rule == DerivativeRule::FreshChain) {
    return Expr::function(name, argument);
  }
  // Primed closed form: differentiate the template with respect to "#".
  auto [base, primes] = split_primes(name);
  Derivation d(*this, [](const Expr& atom) {
    return atom == placeholder() ? Expr(1L) : Expr(0L);
  });
  Expr tmpl = Expr::function(base, placeholder());
  for (int i = 0; i < primes; ++i) tmpl = d(tmpl);
  return apply_template(tmpl, argument);
}

Expr Context::derivative_of(const Expr& application) const {
  const std::string& name = application.name();
  const FunctionSymbol* sym = find(name);
  if (sym == nullptr) raise(ErrorKind::UnknownSymbol, "unknown function '" + name + "'");
  if (sym->rule == DerivativeRule::FreshChain) {
    return Expr::function(name + "'", application.arg());
  }
  if (sym->name != name) {
    return apply(name + "'", application.arg());
  }
  return apply_template(sym->derivative, application.arg());
}

std::optional<Relation> Context::relation_of(const Expr& application) const {
  auto it = functions_.find(application.name());
  if (it == functions_.end() || !it->second.relation) return std::nullopt;
  const Relation& r = *it->second.relation;
  return Relation{apply_template(r.linear, application.arg()),
                  apply_template(r.constant, application.arg())};
}

std::vector<std::string> Context::function_names() const {
  std::vector<std::string> out;
  for (const auto& [name, sym] : functions_) out.push_back(name);
  return out;
}

}  // namespace jetsym
