#include "jetsym/diffalg.hpp"

#include <algorithm>
#include <map>

#include "jetsym/calculus.hpp"
#include "jetsym/error.hpp"
#include "jetsym/normal_form.hpp"

namespace jetsym {

namespace {

bool canonically_zero(const Context& ctx, const Expr& e) {
  if (e.is_zero()) return true;
  try {
    Canonicalizer c(ctx, Budget{500'000, 20.0});
    return c.is_zero(e);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    return zero_test(ctx, e, ZeroTestOptions{20, 0, Budget{0, 0}, false}).zero();
  }
}

}  // namespace

EvolutionEquation EvolutionEquation::make(const Context& ctx, const std::string& dependent,
                                          const Expr& rhs) {
  EvolutionEquation eq;
  eq.dependent = dependent;
  eq.rhs = rhs;
  check_jet_order(ctx, rhs);
  for (const auto& dep : dependents_of(rhs)) {
    if (dep != dependent) raise(ErrorKind::InvalidEquation, "right-hand side mentions foreign variable " + dep);
  }
  if (contains_parameter(rhs, "t")) raise(ErrorKind::InvalidEquation, "right-hand side depends on t");
  eq.order = jet_order(rhs, dependent);
  if (eq.order < 2) raise(ErrorKind::InvalidEquation, "equation order must be at least 2");
  eq.x_dependent = contains_kind(rhs, Kind::Independent);
  if (canonically_zero(ctx, eq.separant(ctx))) raise(ErrorKind::InvalidEquation, "separant vanishes");
  return eq;
}

Expr EvolutionEquation::separant(const Context& ctx) const {
  return partial(ctx, rhs, Expr::jet(dependent, order));
}

DifferentialOperator::DifferentialOperator(std::vector<Expr> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Expr total_x_derivative(const Context& ctx, const Expr& e) { return total_derivative(ctx, e); }

Expr dt_modulo(const Context& ctx, const Expr& e, const EvolutionEquation& eq) {
  std::vector<Expr> prolonged{eq.rhs};
  Derivation dt(ctx, [&](const Expr& atom) -> Expr {
    if (atom.kind() != Kind::Jet) return Expr(0L);
    if (atom.name() != eq.dependent) {
      raise(ErrorKind::InvalidEquation, "no evolution law for " + atom.name());
    }
    while (static_cast<int>(prolonged.size()) <= atom.order()) {
      prolonged.push_back(total_derivative(ctx, prolonged.back()));
    }
    return prolonged[atom.order()];
  });
  return dt(e);
}

DifferentialOperator frechet(const Context& ctx, const Expr& e, const std::string& dependent) {
  int n = jet_order(e, dependent);
  std::vector<Expr> coeffs;
  for (int k = 0; k <= n; ++k) coeffs.push_back(partial(ctx, e, Expr::jet(dependent, k)));
  return DifferentialOperator(std::move(coeffs));
}

Expr apply_operator(const Context& ctx, const DifferentialOperator& op, const Expr& e) {
  std::vector<Expr> terms;
  Expr d = e;
  for (std::size_t i = 0; i < op.coeffs.size(); ++i) {
    if (i > 0) d = total_derivative(ctx, d);
    if (!op.coeffs[i].is_zero()) terms.push_back(op.coeffs[i] * d);
  }
  return Expr::sum(std::move(terms));
}

Expr euler_operator(const Context& ctx, const Expr& e, const std::string& dependent) {
  int n = jet_order(e, dependent);
  std::vector<Expr> terms;
  for (int k = 0; k <= n; ++k) {
    Expr p = partial(ctx, e, Expr::jet(dependent, k));
    if (p.is_zero()) continue;
    Expr d = total_derivative(ctx, p, k);
    terms.push_back(k % 2 == 0 ? d : -d);
  }
  return Expr::sum(std::move(terms));
}

Expr symmetry_expression(const Context& ctx, const EvolutionEquation& eq, const Expr& g) {
  if (!eq.x_dependent && contains_kind(g, Kind::Independent)) {
    raise(ErrorKind::InvalidEquation, "candidate depends on x but the equation does not");
  }
  if (contains_parameter(g, "t")) raise(ErrorKind::InvalidEquation, "candidate depends on t");
  Expr lhs = dt_modulo(ctx, g, eq);
  Expr rhs = apply_operator(ctx, frechet(ctx, eq.rhs, eq.dependent), g);
  return lhs - rhs;
}

Residual make_residual(const Context& ctx, const Expr& expression, const ZeroTestOptions& options) {
  Residual r;
  r.verdict = zero_test(ctx, expression, options);
  switch (r.verdict.outcome) {
    case Outcome::ProvenZero:
      r.expression = Expr(0L);
      break;
    case Outcome::LikelyZero:
      r.expression = expression;
      break;
    case Outcome::NonZero:
      try {
        Budget display{std::min<std::size_t>(options.budget.max_terms, 1'000'000),
                       std::min(options.budget.seconds, 20.0)};
        Canonicalizer c(ctx, display);
        r.expression = c.canonicalize(expression);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::BudgetExceeded && err.kind() != ErrorKind::UnsupportedExtension) throw;
        r.expression = expression;
      }
      break;
  }
  return r;
}

Residual symmetry_residual(const Context& ctx, const EvolutionEquation& eq, const Expr& g,
                           const ZeroTestOptions& options) {
  return make_residual(ctx, symmetry_expression(ctx, eq, g), options);
}

Residual conserved_density_residual(const Context& ctx, const EvolutionEquation& eq, const Expr& rho,
                                    const ZeroTestOptions& options) {
  if (contains_parameter(rho, "t")) raise(ErrorKind::InvalidEquation, "density depends on t");
  return make_residual(ctx, euler_operator(ctx, dt_modulo(ctx, rho, eq), eq.dependent), options);
}

// ---------------------------------------------------------------------------
// Linear algebra over Q(parameters)

std::vector<std::vector<Expr>> nullspace(const Context& ctx, const std::vector<Expr>& columns) {
  const std::size_t n = columns.size();
  if (n == 0) return {};
  Canonicalizer c(ctx);
  std::vector<RatNF> values;
  for (const auto& col : columns) values.push_back(c.convert(col));
  std::vector<Poly> nums = c.common_numerators(values);

  // Split every monomial into an indeterminate part (row key) and a
  // parameter part (coefficient).
  using Key = std::vector<std::pair<std::uint32_t, std::int32_t>>;
  std::map<Key, std::vector<Poly>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : nums[j]) {
      Key key;
      Monomial coeff_mono;
      for (const auto& [a, e] : t.mono.entries()) {
        if (c.atom(a).kind() == Kind::Parameter) {
          coeff_mono = coeff_mono * Monomial::atom(a, e);
        } else {
          key.emplace_back(a, e);
        }
      }
      auto& row = rows[key];
      if (row.empty()) row.resize(n);
      row[j] = poly_add(row[j], Poly{Term{coeff_mono, t.coeff}});
    }
  }
  std::vector<std::vector<RatNF>> m;
  for (auto& [key, row] : rows) {
    std::vector<RatNF> r;
    for (auto& p : row) r.push_back(RatNF{std::move(p), {}});
    m.push_back(std::move(r));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    RatNF inv = c.inverse(m[rank][col]);
    for (std::size_t k = col; k < n; ++k) {
      m[rank][k] = c.mul(m[rank][k], inv);
      c.cancel(m[rank][k]);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      RatNF factor = m[r][col];
      for (std::size_t k = col; k < n; ++k) {
        if (m[rank][k].is_zero()) continue;
        m[r][k] = c.sub(m[r][k], c.mul(factor, m[rank][k]));
        c.cancel(m[r][k]);
      }
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  std::vector<std::vector<Expr>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Expr> v(n, Expr(0L));
    v[free] = Expr(1L);
    for (std::size_t col = 0; col < n; ++col) {
      if (pivot_of_col[col] < 0) continue;
      RatNF entry = c.scale(m[pivot_of_col[col]][free], Rational(-1));
      c.cancel(entry);
      v[col] = c.to_expr(entry);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Expr>> solve_linear_ansatz(const Context& ctx, const EvolutionEquation& eq,
                                                   const std::vector<Expr>& basis) {
  std::vector<Expr> columns;
  for (const auto& b : basis) columns.push_back(symmetry_expression(ctx, eq, b));
  auto space = nullspace(ctx, columns);
  for (auto& v : space) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Expr& e) { return !e.is_zero(); });
    if (lead == v.end() || lead->is_one()) continue;
    Expr scale = *lead;
    for (auto& e : v) e = canonicalize(ctx, e / scale);
  }
  return space;
}

std::optional<std::vector<Expr>> solve_affine(const Context& ctx, const Expr& e,
                                              const std::vector<std::string>& parameters) {
  Bindings zero;
  std::vector<Expr> columns;
  for (const auto& name : parameters) {
    Expr p = Expr::parameter(name);
    zero.emplace(p, Expr(0L));
    Expr d = partial(ctx, e, p);
    for (const auto& other : parameters) {
      if (!canonically_zero(ctx, partial(ctx, d, Expr::parameter(other)))) {
        raise(ErrorKind::NotAffine, "expression is not affine in " + name);
      }
    }
    columns.push_back(d);
  }
  columns.push_back(substitute(e, zero));
  auto space = nullspace(ctx, columns);
  for (const auto& v : space) {
    const Expr& last = v.back();
    if (last.is_zero()) continue;
    std::vector<Expr> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(canonicalize(ctx, v[i] / last));
    return out;
  }
  return std::nullopt;
}

}  // namespace jetsym
