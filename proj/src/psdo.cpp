#include "jetsym/psdo.hpp"

#include <algorithm>
#include <map>

#include "jetsym/calculus.hpp"
#include "jetsym/error.hpp"
#include "jetsym/normal_form.hpp"

namespace jetsym {

namespace {

// Univariate polynomials in one jet variable y over the field K of normal
// forms free of y. Index i holds the coefficient of y^i; the last entry is
// nonzero.
using UniPoly = std::vector<RatNF>;

class UniRing {
 public:
  UniRing(Canonicalizer& c, std::uint32_t y) : c_(c), y_(y) {}

  int deg(const UniPoly& a) const { return static_cast<int>(a.size()) - 1; }

  UniPoly constant(const RatNF& k) const {
    if (k.is_zero()) return {};
    return {k};
  }

  RatNF norm(RatNF v) {
    c_.cancel(v);
    return v;
  }

  void trim(UniPoly& a) const {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }

  UniPoly add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), c_.constant(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < a.size() && i < b.size()) {
        r[i] = norm(c_.add(a[i], b[i]));
      } else {
        r[i] = i < a.size() ? a[i] : b[i];
      }
    }
    trim(r);
    return r;
  }

  UniPoly scale(const UniPoly& a, const RatNF& k) {
    if (k.is_zero()) return {};
    UniPoly r;
    for (const auto& x : a) r.push_back(x.is_zero() ? x : norm(c_.mul(x, k)));
    trim(r);
    return r;
  }

  UniPoly sub(const UniPoly& a, const UniPoly& b) { return add(a, scale(b, c_.constant(-1))); }

  UniPoly mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, c_.constant(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        r[i + j] = c_.add(r[i + j], c_.mul(a[i], b[j]));
      }
    }
    for (auto& x : r) c_.cancel(x);
    trim(r);
    return r;
  }

  UniPoly power(const UniPoly& a, int e) {
    UniPoly r = constant(c_.constant(1));
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  UniPoly derivative(const UniPoly& a) {
    UniPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(c_.scale(a[i], Rational(static_cast<long>(i))));
    trim(r);
    return r;
  }

  std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b) {
    if (b.empty()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    UniPoly q;
    if (deg(a) < deg(b)) return {q, a};
    q.assign(a.size() - b.size() + 1, c_.constant(0));
    RatNF lead_inv = norm(c_.inverse(b.back()));
    while (!a.empty() && deg(a) >= deg(b)) {
      int shift = deg(a) - deg(b);
      RatNF coef = norm(c_.mul(a.back(), lead_inv));
      q[shift] = coef;
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        a[shift + j] = norm(c_.sub(a[shift + j], c_.mul(coef, b[j])));
      }
      a.pop_back();
      trim(a);
    }
    trim(q);
    return {q, a};
  }

  UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) raise(ErrorKind::IntegrandOutsideClass, "inexact polynomial division");
    return q;
  }

  UniPoly monic(const UniPoly& a) {
    if (a.empty()) return a;
    return scale(a, norm(c_.inverse(a.back())));
  }

  UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.empty()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s with s * a = gcd(a, b) (mod b), together with the monic gcd.
  std::pair<UniPoly, UniPoly> half_extended(UniPoly a, UniPoly b) {
    UniPoly s0 = constant(c_.constant(1));
    UniPoly s1;
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      UniPoly s2 = sub(s0, mul(q, s1));
      a = std::move(b);
      b = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    RatNF inv = norm(c_.inverse(a.back()));
    return {scale(s0, inv), scale(a, inv)};
  }

  // (s, t) with s * a + t * b = rhs and deg s < deg b.
  std::pair<UniPoly, UniPoly> solve_bezout(const UniPoly& a, const UniPoly& b, const UniPoly& rhs) {
    auto [s, g] = half_extended(a, b);
    UniPoly q = exact_div(rhs, g);
    s = mul(s, q);
    if (!s.empty() && deg(s) >= deg(b)) s = divmod(s, b).second;
    UniPoly t = exact_div(sub(rhs, mul(s, a)), b);
    return {s, t};
  }

  // Yun's algorithm: monic squarefree factors f_1, f_2, ... with
  // a = lc(a) * prod f_i^i.
  std::vector<UniPoly> squarefree(const UniPoly& a) {
    std::vector<UniPoly> out;
    UniPoly da = derivative(a);
    UniPoly g = gcd(a, da);
    UniPoly cpart = exact_div(a, g);
    UniPoly dpart = sub(exact_div(da, g), derivative(cpart));
    while (deg(cpart) > 0) {
      UniPoly f = gcd(cpart, dpart);
      cpart = exact_div(cpart, f);
      dpart = sub(exact_div(dpart, f), derivative(cpart));
      out.push_back(f);
    }
    return out;
  }

  RatNF to_value(const UniPoly& a) {
    RatNF r = c_.constant(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      RatNF yi{Poly{Term{Monomial::atom(y_, static_cast<std::int32_t>(i)), Rational(1)}}, {}};
      r = c_.add(r, i == 0 ? a[i] : c_.mul(a[i], yi));
    }
    c_.cancel(r);
    return r;
  }

  // Splits a polynomial (no negative powers of y) by its degree in y.
  UniPoly from_poly(const Poly& p, int shift = 0) {
    std::map<int, Poly> parts;
    for (const auto& t : p) {
      int d = t.mono.degree(y_) + shift;
      parts[d].push_back(Term{t.mono.without(y_), t.coeff});
    }
    UniPoly r;
    for (auto& [d, part] : parts) {
      std::sort(part.begin(), part.end(),
                [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
      if (static_cast<int>(r.size()) <= d) r.resize(d + 1, c_.constant(0));
      r[d] = RatNF{std::move(part), {}};
    }
    trim(r);
    return r;
  }

 private:
  Canonicalizer& c_;
  std::uint32_t y_;
};

// Antiderivative of a rational function of y (coefficients free of y),
// rational part only.
RatNF antiderivative_in(Canonicalizer& c, const Expr& integrand, const Expr& y) {
  for (const auto& atom : atoms_of(integrand)) {
    if (atom != y && contains(atom, y)) {
      raise(ErrorKind::IntegrandOutsideClass, "integration variable " + to_string(y) + " occurs inside " +
                                                  to_string(atom));
    }
  }
  const std::uint32_t iy = c.atom_index(y);
  RatNF value = c.convert(integrand);
  c.cancel(value);
  UniRing ring(c, iy);

  int low = 0;
  for (const auto& t : value.num) low = std::min(low, t.mono.degree(iy));

  // value = num(y) y^low / (den_y(y) * den_k)
  std::vector<std::pair<std::uint32_t, int>> den_k;
  UniPoly den_y = ring.constant(c.constant(1));
  for (const auto& [id, e] : value.den) {
    bool has_y = std::any_of(c.factor(id).begin(), c.factor(id).end(),
                             [&](const Term& t) { return t.mono.degree(iy) != 0; });
    if (has_y) {
      den_y = ring.mul(den_y, ring.power(ring.from_poly(c.factor(id)), e));
    } else {
      den_k.emplace_back(id, e);
    }
  }
  if (low < 0) {
    UniPoly shifted(-low + 1, c.constant(0));
    shifted.back() = c.constant(1);
    den_y = ring.mul(den_y, shifted);
  }
  UniPoly num = ring.from_poly(value.num, -low);

  // Hermite reduction, quadratic variant.
  RatNF rational_part = c.constant(0);
  auto factors = ring.squarefree(den_y);
  UniPoly den = den_y;
  for (std::size_t i = 2; i <= factors.size(); ++i) {
    const UniPoly& v = factors[i - 1];
    if (ring.deg(v) <= 0) continue;
    UniPoly u = ring.exact_div(den, ring.power(v, static_cast<int>(i)));
    UniPoly uv = ring.mul(u, ring.derivative(v));
    for (int j = static_cast<int>(i) - 1; j >= 1; --j) {
      UniPoly rhs = ring.scale(num, c.constant(Rational(-1, j)));
      auto [b, cc] = ring.solve_bezout(uv, v, rhs);
      RatNF piece = c.mul(ring.to_value(b), c.inverse(c.power(ring.to_value(v), j)));
      rational_part = c.add(rational_part, piece);
      num = ring.sub(ring.scale(cc, c.constant(-j)), ring.mul(u, ring.derivative(b)));
    }
    den = ring.mul(u, v);
  }

  auto [quotient, remainder] = ring.divmod(num, den);
  if (!remainder.empty()) {
    raise(ErrorKind::IntegrandOutsideClass, "antiderivative in " + to_string(y) + " needs logarithms");
  }
  // den may carry a constant leading coefficient from K; divmod absorbed it.
  UniPoly integrated;
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    if (integrated.size() < i + 2) integrated.resize(i + 2, c.constant(0));
    integrated[i + 1] = c.scale(quotient[i], Rational(1, static_cast<long>(i + 1)));
  }
  ring.trim(integrated);
  RatNF total = c.add(rational_part, ring.to_value(integrated));
  if (!den_k.empty()) total = c.mul(total, RatNF{poly_constant(Rational(1)), den_k});
  c.cancel(total);
  return total;
}

}  // namespace

Verdict is_total_x_derivative(const Context& ctx, const Expr& e, const std::string& dependent,
                              const ZeroTestOptions& options) {
  return zero_test(ctx, euler_operator(ctx, e, dependent), options);
}

Expr integrate_total(const Context& ctx, const Expr& e, const std::string& dependent,
                     const ZeroTestOptions& options) {
  if (contains_kind(e, Kind::Independent) || contains_parameter(e, "t")) {
    raise(ErrorKind::IntegrandOutsideClass, "integrand depends on x or t");
  }
  Verdict euler = is_total_x_derivative(ctx, e, dependent, options);
  if (euler.outcome == Outcome::NonZero) {
    raise(ErrorKind::NotATotalDerivative, "Euler operator does not vanish");
  }
  Canonicalizer c(ctx, options.budget);
  std::vector<Expr> pieces;
  Expr rest = e;
  while (true) {
    RatNF value = c.convert(rest);
    if (value.is_zero()) break;
    c.cancel(value);
    Expr current = c.to_expr(value);
    int n = jet_order(current, dependent);
    if (n <= 0) raise(ErrorKind::NotATotalDerivative, "remainder " + to_string(current) + " has no antiderivative");
    Expr top = Expr::jet(dependent, n);
    Expr coeff = partial(ctx, current, top);
    if (contains(coeff, top)) {
      raise(ErrorKind::NotATotalDerivative, "not affine in " + to_string(top));
    }
    Expr piece = c.to_expr(antiderivative_in(c, coeff, Expr::jet(dependent, n - 1)));
    pieces.push_back(piece);
    rest = current - total_derivative(ctx, piece);
  }
  return c.canonicalize(Expr::sum(std::move(pieces)));
}

Expr apply_psdo(const Context& ctx, const PseudoDiffOperator& op, const Expr& e,
                const ZeroTestOptions& options) {
  std::vector<Expr> terms{apply_operator(ctx, op.local, e)};
  for (const auto& term : op.nonlocal) {
    Expr integrand = apply_operator(ctx, term.inner, e);
    terms.push_back(term.left * integrate_total(ctx, integrand, op.dependent, options));
  }
  Canonicalizer c(ctx, options.budget);
  return c.canonicalize(Expr::sum(std::move(terms)));
}

}  // namespace jetsym
