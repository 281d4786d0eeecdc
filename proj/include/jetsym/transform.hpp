#pragma once

// Differential substitutions v = Phi(u, u1, ..., un) between evolution
// equations, point changes w = phi(u), and the invariance test for implicit
// relations Phi(u-jets; v-jets) = 0.

#include <string>

#include "jetsym/calculus.hpp"
#include "jetsym/diffalg.hpp"
#include "jetsym/error.hpp"

namespace jetsym {

struct Substitution {
  std::string source = "u";
  std::string target = "v";
  Expr phi;
  int order = 0;

  // Checks that phi lives in the source jet and that d phi / d u_n is not
  // identically zero. Raises InvalidEquation.
  static Substitution make(const Context& ctx, const std::string& source, const std::string& target,
                           const Expr& phi);
};

// Phi = 0 with a designated jet variable to eliminate (affine in it).
struct ImplicitRelation {
  Expr phi;
  Expr eliminate;
};

// Raised by point_pushforward; `residual` collects the part of the
// transformed right-hand side that still depends on the source variable.
class NotClosedFormError : public Error {
 public:
  NotClosedFormError(const std::string& what, Expr rhs, Expr residual)
      : Error(ErrorKind::NotClosedForm, what), rhs_(std::move(rhs)), residual_(std::move(residual)) {}

  const Expr& rhs() const { return rhs_; }
  const Expr& residual() const { return residual_; }

 private:
  Expr rhs_;
  Expr residual_;
};

// Renames the dependent variable of an equation (all jets follow).
EvolutionEquation rename_dependent(const Context& ctx, const EvolutionEquation& eq, const std::string& name);
Expr rename_jets(const Expr& e, const std::string& from, const std::string& to);

// dt Phi along the source minus the target rhs evaluated on v_k = D^k Phi.
Expr pushforward_expression(const Context& ctx, const Substitution& s, const EvolutionEquation& source,
                            const EvolutionEquation& target);

Residual pushforward_residual(const Context& ctx, const Substitution& s, const EvolutionEquation& source,
                              const EvolutionEquation& target, const ZeroTestOptions& options = {});

// Transformed equation for w = phi(u). `closure` rewrites the remaining
// source atoms (u itself or function applications of u) in terms of w; an
// application equal to phi is bound to w automatically.
EvolutionEquation point_pushforward(const Context& ctx, const Expr& phi, const EvolutionEquation& source,
                                    const std::string& target, const Bindings& closure = {});

Expr implicit_invariance_expression(const Context& ctx, const ImplicitRelation& relation,
                                    const EvolutionEquation& source, const EvolutionEquation& target);

Residual implicit_invariance_residual(const Context& ctx, const ImplicitRelation& relation,
                                      const EvolutionEquation& source, const EvolutionEquation& target,
                                      const ZeroTestOptions& options = {});

}  // namespace jetsym
