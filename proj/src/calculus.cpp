#include "jetsym/calculus.hpp"

#include "jetsym/error.hpp"

namespace jetsym {

Expr Derivation::operator()(const Expr& e) {
  auto it = memo_.find(e.id());
  if (it != memo_.end()) return it->second;
  Expr out = apply_node(e);
  memo_.emplace(e.id(), out);
  return out;
}

Expr Derivation::apply_node(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return Expr(0L);
    case Kind::Parameter:
    case Kind::Independent:
    case Kind::Jet:
      return rule_(e);
    case Kind::Function: {
      Expr inner = (*this)(e.arg());
      if (inner.is_zero()) return inner;
      return ctx_.derivative_of(e) * inner;
    }
    case Kind::Sqrt: {
      Expr inner = (*this)(e.arg());
      if (inner.is_zero()) return inner;
      return Expr::product({Expr(Rational(1, 2)), inner, pow(e, -1)});
    }
    case Kind::Sum: {
      std::vector<Expr> terms;
      terms.reserve(e.args().size());
      for (const auto& t : e.args()) {
        Expr d = (*this)(t);
        if (!d.is_zero()) terms.push_back(std::move(d));
      }
      return Expr::sum(std::move(terms));
    }
    case Kind::Product: {
      auto fs = e.args();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_constant()) continue;
        Expr d = (*this)(fs[i]);
        if (d.is_zero()) continue;
        std::vector<Expr> factors;
        factors.reserve(fs.size());
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (j != i) factors.push_back(fs[j]);
        }
        factors.push_back(std::move(d));
        terms.push_back(Expr::product(std::move(factors)));
      }
      return Expr::sum(std::move(terms));
    }
    case Kind::Power: {
      Expr d = (*this)(e.arg());
      if (d.is_zero()) return d;
      return Expr::product({Expr(e.exponent()), pow(e.arg(), e.exponent() - 1), d});
    }
  }
  return Expr(0L);
}

Expr total_derivative(const Context& ctx, const Expr& e) {
  Derivation d(ctx, [&ctx](const Expr& atom) -> Expr {
    switch (atom.kind()) {
      case Kind::Independent:
        return Expr(1L);
      case Kind::Jet:
        if (atom.order() + 1 > ctx.max_jet_order) {
          raise(ErrorKind::JetOrderOverflow,
                "jet order " + std::to_string(atom.order() + 1) + " exceeds cutoff " +
                    std::to_string(ctx.max_jet_order));
        }
        return Expr::jet(atom.name(), atom.order() + 1);
      default:
        return Expr(0L);
    }
  });
  return d(e);
}

Expr total_derivative(const Context& ctx, const Expr& e, int times) {
  Expr out = e;
  for (int i = 0; i < times; ++i) out = total_derivative(ctx, out);
  return out;
}

Expr partial(const Context& ctx, const Expr& e, const Expr& symbol) {
  if (symbol.kind() == Kind::Function || symbol.kind() == Kind::Sqrt) {
    // Treat the application as an independent atom.
    Expr marker = Expr::parameter("#partial");
    Expr replaced = substitute(e, Bindings{{symbol, marker}});
    Derivation d(ctx, [&](const Expr& atom) { return atom == marker ? Expr(1L) : Expr(0L); });
    return substitute(d(replaced), Bindings{{marker, symbol}});
  }
  if (!symbol.is_atom()) raise(ErrorKind::UnknownSymbol, "cannot differentiate by " + to_string(symbol));
  Derivation d(ctx, [&](const Expr& atom) { return atom == symbol ? Expr(1L) : Expr(0L); });
  return d(e);
}

namespace {

class Substituter {
 public:
  explicit Substituter(const Bindings& b) : bindings_(b) {}

  Expr operator()(const Expr& e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    Expr out = apply_node(e);
    memo_.emplace(e.id(), out);
    return out;
  }

 private:
  Expr apply_node(const Expr& e) {
    if (e.is_constant()) return e;
    auto hit = bindings_.find(e);
    if (hit != bindings_.end()) return hit->second;
    switch (e.kind()) {
      case Kind::Function: {
        Expr a = (*this)(e.arg());
        return a.id() == e.arg().id() ? e : Expr::function(e.name(), a);
      }
      case Kind::Sqrt: {
        Expr a = (*this)(e.arg());
        return a.id() == e.arg().id() ? e : Expr::sqrt(a);
      }
      case Kind::Sum:
      case Kind::Product: {
        std::vector<Expr> parts;
        bool changed = false;
        for (const auto& c : e.args()) {
          parts.push_back((*this)(c));
          changed = changed || parts.back().id() != c.id();
        }
        if (!changed) return e;
        return e.kind() == Kind::Sum ? Expr::sum(std::move(parts)) : Expr::product(std::move(parts));
      }
      case Kind::Power: {
        Expr a = (*this)(e.arg());
        return a.id() == e.arg().id() ? e : pow(a, e.exponent());
      }
      default:
        return e;
    }
  }

  const Bindings& bindings_;
  std::unordered_map<const Node*, Expr> memo_;
};

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  Substituter s(bindings);
  return s(e);
}

void check_jet_order(const Context& ctx, const Expr& e) {
  visit_dag(e, [&](const Expr& n) {
    if (n.kind() == Kind::Jet && n.order() > ctx.max_jet_order) {
      raise(ErrorKind::JetOrderOverflow, "jet order " + std::to_string(n.order()) +
                                             " exceeds cutoff " + std::to_string(ctx.max_jet_order));
    }
  });
}

std::vector<Expr> atoms_of(const Expr& e) {
  std::vector<Expr> out;
  visit_dag(e, [&](const Expr& n) {
    if (n.is_atom()) out.push_back(n);
  });
  return out;
}

}  // namespace jetsym
