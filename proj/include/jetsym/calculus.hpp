#pragma once

// Derivations on the expression DAG: total x-derivative, partial
// derivatives with respect to single symbols, and substitution.

#include <functional>
#include <unordered_map>

#include "jetsym/context.hpp"
#include "jetsym/expr.hpp"

namespace jetsym {

using Bindings = std::unordered_map<Expr, Expr, ExprHash>;

// A derivation fixed by its values on parameters, x and jet variables;
// function applications and surds follow the chain rule through their
// argument.
class Derivation {
 public:
  using AtomRule = std::function<Expr(const Expr&)>;

  Derivation(const Context& ctx, AtomRule rule) : ctx_(ctx), rule_(std::move(rule)) {}

  Expr operator()(const Expr& e);

 private:
  Expr apply_node(const Expr& e);

  const Context& ctx_;
  AtomRule rule_;
  std::unordered_map<const Node*, Expr> memo_;
};

// D: x -> 1, u_k -> u_{k+1}. Raises JetOrderOverflow past the cutoff.
Expr total_derivative(const Context& ctx, const Expr& e);
Expr total_derivative(const Context& ctx, const Expr& e, int times);

// Partial derivative with respect to a parameter, x or a jet variable,
// chaining through function symbols of that variable.
Expr partial(const Context& ctx, const Expr& e, const Expr& symbol);

// Simultaneous replacement of atoms (parameters, x, jets, or whole function
// applications); function arguments are rewritten recursively.
Expr substitute(const Expr& e, const Bindings& bindings);

// Raises JetOrderOverflow if e mentions a jet above the cutoff.
void check_jet_order(const Context& ctx, const Expr& e);

// Every atom occurring in e (parameters, x, jets, functions, surds).
std::vector<Expr> atoms_of(const Expr& e);

}  // namespace jetsym
