#include "jetsym/transform.hpp"

#include <algorithm>

#include "jetsym/normal_form.hpp"

namespace jetsym {

namespace {

bool mentions_dependent(const Expr& e, const std::string& dependent) {
  return jet_order(e, dependent) >= 0;
}

}  // namespace

Substitution Substitution::make(const Context& ctx, const std::string& source, const std::string& target,
                                const Expr& phi) {
  if (source == target) raise(ErrorKind::InvalidEquation, "source and target variables coincide");
  for (const auto& dep : dependents_of(phi)) {
    if (dep != source) raise(ErrorKind::InvalidEquation, "substitution mentions foreign variable " + dep);
  }
  check_jet_order(ctx, phi);
  Substitution s{source, target, phi, jet_order(phi, source)};
  if (s.order < 0) raise(ErrorKind::InvalidEquation, "substitution does not involve " + source);
  Expr lead = partial(ctx, phi, Expr::jet(source, s.order));
  if (canonicalize(ctx, lead).is_zero()) {
    raise(ErrorKind::InvalidEquation, "substitution does not depend on its top jet");
  }
  return s;
}

Expr rename_jets(const Expr& e, const std::string& from, const std::string& to) {
  if (from == to) return e;
  Bindings b;
  for (const auto& atom : atoms_of(e)) {
    if (atom.kind() == Kind::Jet && atom.name() == from) b.emplace(atom, Expr::jet(to, atom.order()));
  }
  return substitute(e, b);
}

EvolutionEquation rename_dependent(const Context& ctx, const EvolutionEquation& eq, const std::string& name) {
  if (eq.dependent == name) return eq;
  return EvolutionEquation::make(ctx, name, rename_jets(eq.rhs, eq.dependent, name));
}

Expr pushforward_expression(const Context& ctx, const Substitution& s, const EvolutionEquation& source,
                            const EvolutionEquation& target) {
  if (source.dependent != s.source || target.dependent != s.target) {
    raise(ErrorKind::InvalidEquation, "equation variables do not match the substitution");
  }
  Bindings prolonged;
  Expr d = s.phi;
  for (int k = 0; k <= target.order; ++k) {
    if (k > 0) d = total_derivative(ctx, d);
    prolonged.emplace(Expr::jet(s.target, k), d);
  }
  return dt_modulo(ctx, s.phi, source) - substitute(target.rhs, prolonged);
}

Residual pushforward_residual(const Context& ctx, const Substitution& s, const EvolutionEquation& source,
                              const EvolutionEquation& target, const ZeroTestOptions& options) {
  return make_residual(ctx, pushforward_expression(ctx, s, source, target), options);
}

EvolutionEquation point_pushforward(const Context& ctx, const Expr& phi, const EvolutionEquation& source,
                                    const std::string& target, const Bindings& closure) {
  const std::string& u = source.dependent;
  if (target == u) raise(ErrorKind::InvalidEquation, "target variable must differ from the source");
  if (jet_order(phi, u) != 0 || dependents_of(phi).size() != 1) {
    raise(ErrorKind::InvalidEquation, "point substitution must depend on " + u + " alone");
  }
  Expr slope = partial(ctx, phi, Expr::jet(u, 0));
  if (canonicalize(ctx, slope).is_zero()) raise(ErrorKind::InvalidEquation, "point substitution is degenerate");

  // Inverse chain rule: u1 = w1 / phi'(u), u_{k+1} = D u_k with D acting on
  // w-jets and on u through u1.
  Expr first = Expr::jet(target, 1) / slope;
  Derivation d(ctx, [&](const Expr& atom) -> Expr {
    switch (atom.kind()) {
      case Kind::Independent:
        return Expr(1L);
      case Kind::Jet:
        if (atom.name() == u && atom.order() == 0) return first;
        if (atom.name() == target) return Expr::jet(target, atom.order() + 1);
        raise(ErrorKind::InvalidEquation, "unexpected jet " + to_string(atom));
      default:
        return Expr(0L);
    }
  });
  Bindings jets;
  Expr uk = first;
  for (int k = 1; k <= source.order; ++k) {
    if (k > 1) uk = d(uk);
    jets.emplace(Expr::jet(u, k), uk);
  }
  Expr h = slope * substitute(source.rhs, jets);

  Bindings finish = closure;
  Expr u0 = Expr::jet(u, 0);
  if (phi.kind() == Kind::Function && !finish.count(phi)) finish.emplace(phi, Expr::jet(target, 0));
  // Affine phi = a u + b inverts to u = (w - b) / a.
  if (!finish.count(u0) && !mentions_dependent(canonicalize(ctx, slope), u)) {
    Expr offset = substitute(phi, {{u0, Expr(0L)}});
    finish.emplace(u0, canonicalize(ctx, (Expr::jet(target, 0) - offset) / slope));
  }

  Canonicalizer c(ctx);
  Expr rhs = c.canonicalize(substitute(c.canonicalize(h), finish));
  if (!mentions_dependent(rhs, u)) return EvolutionEquation::make(ctx, target, rhs);

  // Collect the numerator terms that still involve u.
  RatNF value = c.convert(rhs);
  bool den_open = std::any_of(value.den.begin(), value.den.end(), [&](const auto& f) {
    return std::any_of(c.factor(f.first).begin(), c.factor(f.first).end(), [&](const Term& t) {
      return std::any_of(t.mono.entries().begin(), t.mono.entries().end(),
                         [&](const auto& en) { return mentions_dependent(c.atom(en.first), u); });
    });
  });
  Expr residual = rhs;
  if (!den_open) {
    Poly open;
    for (const auto& t : value.num) {
      bool bad = std::any_of(t.mono.entries().begin(), t.mono.entries().end(),
                             [&](const auto& en) { return mentions_dependent(c.atom(en.first), u); });
      if (bad) open.push_back(t);
    }
    residual = c.to_expr(RatNF{open, value.den});
  }
  throw NotClosedFormError("transformed right-hand side still depends on " + u, rhs, residual);
}

Expr implicit_invariance_expression(const Context& ctx, const ImplicitRelation& relation,
                                    const EvolutionEquation& source, const EvolutionEquation& target) {
  const std::string& v = target.dependent;
  const Expr& pivot = relation.eliminate;
  if (pivot.kind() != Kind::Jet || pivot.name() != v) {
    raise(ErrorKind::NotAffine, "designated variable must be a jet of " + v);
  }
  for (const auto& dep : dependents_of(relation.phi)) {
    if (dep != source.dependent && dep != v) raise(ErrorKind::InvalidEquation, "relation mentions " + dep);
  }
  const int j = pivot.order();

  // X Phi = sum_k dPhi/du_k D^k F + sum_k dPhi/dv_k D^k H.
  std::vector<Expr> terms;
  for (const auto* eq : {&source, &target}) {
    int n = jet_order(relation.phi, eq->dependent);
    Expr dk = eq->rhs;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) dk = total_derivative(ctx, dk);
      Expr p = partial(ctx, relation.phi, Expr::jet(eq->dependent, k));
      if (!p.is_zero()) terms.push_back(p * dk);
    }
  }
  Expr x_phi = Expr::sum(std::move(terms));

  // Solve Phi = 0 for the pivot: Phi = lead * pivot + rest.
  Expr lead = partial(ctx, relation.phi, pivot);
  if (contains(lead, pivot) || canonicalize(ctx, lead).is_zero()) {
    raise(ErrorKind::NotAffine, "relation is not affine in " + to_string(pivot));
  }
  Expr rest = substitute(relation.phi, Bindings{{pivot, Expr(0L)}});
  Expr solved = -rest / lead;
  if (jet_order(solved, v) >= j) {
    raise(ErrorKind::NotAffine, "solution for " + to_string(pivot) + " involves higher jets of " + v);
  }

  std::vector<Expr> derivs{solved};
  Expr out = x_phi;
  for (int m = jet_order(out, v); m >= j; m = jet_order(out, v)) {
    while (static_cast<int>(derivs.size()) <= m - j) derivs.push_back(total_derivative(ctx, derivs.back()));
    out = substitute(out, Bindings{{Expr::jet(v, m), derivs[m - j]}});
  }
  return out;
}

Residual implicit_invariance_residual(const Context& ctx, const ImplicitRelation& relation,
                                      const EvolutionEquation& source, const EvolutionEquation& target,
                                      const ZeroTestOptions& options) {
  return make_residual(ctx, implicit_invariance_expression(ctx, relation, source, target), options);
}

}  // namespace jetsym
