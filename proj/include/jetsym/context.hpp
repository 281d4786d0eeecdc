#pragma once

// Symbol tables: declared function symbols with their derivative rules and
// optional quadratic relations, dependent variables, parameters and the jet
// order cutoff. A Context is built once and then shared read-only.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jetsym/expr.hpp"

namespace jetsym {

enum class DerivativeRule { FreshChain, ClosedForm };

// Quadratic relation f^2 + linear*f + constant = 0 satisfied by f(#).
struct Relation {
  Expr linear;
  Expr constant;
};

struct FunctionSymbol {
  std::string name;
  DerivativeRule rule = DerivativeRule::FreshChain;
  // ClosedForm only: f'(#) as an expression in the placeholder "#".
  Expr derivative;
  std::optional<Relation> relation;
};

class Context {
 public:
  // Declares u, v, w as dependent variables and the builtins exp, ln, tan,
  // tanh.
  Context();

  // Placeholder argument used inside derivative and relation templates.
  static Expr placeholder();
  static Expr apply_template(const Expr& tmpl, const Expr& argument);

  void declare_dependent(const std::string& name);
  void declare_parameter(const std::string& name);
  void declare_fresh(const std::string& name);
  void declare_closed(const std::string& name, Expr derivative,
                      std::optional<Relation> relation = std::nullopt);

  // wp with wp' = wp'(#), wp'' = 6 wp^2 - g2/2 and wp'^2 = 4 wp^3 - g2 wp - g3.
  void declare_weierstrass(const Expr& g2, const Expr& g3, const std::string& name = "wp");

  // Half-argument pair: P' = Q/2, Q' = 3 P^2 - g2/4, Q^2 = 4 P^3 - g2 P - g3.
  void declare_half_weierstrass(const Expr& g2, const Expr& g3, const std::string& p = "P",
                                const std::string& q = "Q");

  // Root of a*f^2 + (3/2 wp + c)*f + b = 0, differentiated implicitly.
  void declare_quadratic_root(const std::string& name, const Expr& a, const Expr& b,
                              const Expr& c, const std::string& wp = "wp");

  bool is_dependent(const std::string& name) const;
  bool is_parameter(const std::string& name) const;
  const std::set<std::string>& dependents() const { return dependents_; }
  const std::set<std::string>& parameters() const { return parameters_; }

  // Resolves a possibly primed name. Returns nullptr when neither the name
  // nor its unprimed base is declared.
  const FunctionSymbol* find(const std::string& name) const;
  bool knows_function(const std::string& name) const;

  // f(arg) with primes resolved: fresh chains yield new symbols, closed
  // forms are differentiated through their templates.
  Expr apply(const std::string& name, const Expr& argument) const;

  // d/d(arg) of the function application `f`, as an expression in its argument.
  Expr derivative_of(const Expr& application) const;

  // Relation satisfied by the application, if its symbol declares one.
  std::optional<Relation> relation_of(const Expr& application) const;

  std::vector<std::string> function_names() const;

  int max_jet_order = 12;
  bool strict_parameters = false;

 private:
  std::set<std::string> dependents_;
  std::set<std::string> parameters_;
  std::map<std::string, FunctionSymbol> functions_;
};

// Splits trailing apostrophes: "wp''" -> ("wp", 2).
std::pair<std::string, int> split_primes(const std::string& name);

}  // namespace jetsym
