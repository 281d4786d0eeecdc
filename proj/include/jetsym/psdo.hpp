#pragma once

// Pseudodifferential operators with D^-1 terms and formal integration in
// the differential ring of jet expressions.

#include <string>
#include <vector>

#include "jetsym/diffalg.hpp"

namespace jetsym {

// left * D^-1 o inner
struct NonlocalTerm {
  Expr left;
  DifferentialOperator inner;
};

struct PseudoDiffOperator {
  std::string dependent = "u";
  DifferentialOperator local;
  std::vector<NonlocalTerm> nonlocal;
};

// Verdict of the Euler test on e.
Verdict is_total_x_derivative(const Context& ctx, const Expr& e, const std::string& dependent = "u",
                              const ZeroTestOptions& options = {});

// Q with D Q = e and integration constant 0. Raises NotATotalDerivative
// when the Euler test fails and IntegrandOutsideClass when an antiderivative
// would need logarithms or an integration variable hidden in a function
// symbol.
Expr integrate_total(const Context& ctx, const Expr& e, const std::string& dependent = "u",
                     const ZeroTestOptions& options = {});

Expr apply_psdo(const Context& ctx, const PseudoDiffOperator& op, const Expr& e,
                const ZeroTestOptions& options = {});

}  // namespace jetsym
