#pragma once

// Jet-space calculus on scalar evolution equations u_t = F(x, u, u1, ..., um).

#include <optional>
#include <string>
#include <vector>

#include "jetsym/context.hpp"
#include "jetsym/expr.hpp"
#include "jetsym/zero_test.hpp"

namespace jetsym {

struct EvolutionEquation {
  std::string dependent = "u";
  Expr rhs;
  int order = 0;
  bool x_dependent = false;

  // Validates order >= 2, a nonzero separant and the absence of t and of
  // foreign dependent variables. Raises InvalidEquation.
  static EvolutionEquation make(const Context& ctx, const std::string& dependent, const Expr& rhs);

  Expr separant(const Context& ctx) const;
};

// Sum of coeffs[i] * D^i, trailing zeros trimmed.
struct DifferentialOperator {
  std::vector<Expr> coeffs;

  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<Expr> c);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct Residual {
  Expr expression;  // canonical when it could be computed within budget
  Verdict verdict;
};

Expr total_x_derivative(const Context& ctx, const Expr& e);

// Time derivative along solutions: u_k -> D^k F, chained through function
// symbols of u.
Expr dt_modulo(const Context& ctx, const Expr& e, const EvolutionEquation& eq);

DifferentialOperator frechet(const Context& ctx, const Expr& e, const std::string& dependent = "u");

Expr apply_operator(const Context& ctx, const DifferentialOperator& op, const Expr& e);

// Euler operator sum_k (-D)^k d/du_k.
Expr euler_operator(const Context& ctx, const Expr& e, const std::string& dependent = "u");

// Expression D_t G - F_*(G).
Expr symmetry_expression(const Context& ctx, const EvolutionEquation& eq, const Expr& g);

// Zero-tests `expression` and attaches a canonical rendering.
Residual make_residual(const Context& ctx, const Expr& expression, const ZeroTestOptions& options);

Residual symmetry_residual(const Context& ctx, const EvolutionEquation& eq, const Expr& g,
                           const ZeroTestOptions& options = {});

Residual conserved_density_residual(const Context& ctx, const EvolutionEquation& eq, const Expr& rho,
                                    const ZeroTestOptions& options = {});

// Basis of the coefficient vectors c over Q(parameters) for which
// sum_i c_i * columns[i] vanishes identically. Parameters are field
// elements; all other atoms are independent indeterminates. Coefficients
// are collected from the canonical numerators; nothing is sampled.
std::vector<std::vector<Expr>> nullspace(const Context& ctx, const std::vector<Expr>& columns);

// Solution space of the symmetry condition for sum_i c_i * basis[i]; each
// returned vector is scaled so that its first nonzero entry is 1.
std::vector<std::vector<Expr>> solve_linear_ansatz(const Context& ctx, const EvolutionEquation& eq,
                                                   const std::vector<Expr>& basis);

// Solves sum_j p_j * (d e / d p_j) + e|_{p=0} = 0 for the named parameters,
// where e is affine in them. Returns nullopt when inconsistent; raises
// NotAffine when e is not affine in the parameters.
std::optional<std::vector<Expr>> solve_affine(const Context& ctx, const Expr& e,
                                              const std::vector<std::string>& parameters);

}  // namespace jetsym
