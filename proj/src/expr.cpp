#include "jetsym/expr.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "jetsym/error.hpp"

namespace jetsym {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
  std::size_t h = mpz_get_ui(q.get_num_mpz_t());
  h = mix(h, mpz_sgn(q.get_num_mpz_t()) + 2);
  h = mix(h, mpz_size(q.get_num_mpz_t()));
  return mix(h, mpz_get_ui(q.get_den_mpz_t()));
}

std::size_t compute_hash(const Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x51ed27ULL + 7;
  switch (n.kind) {
    case Kind::Constant:
      return mix(h, hash_rational(n.value));
    case Kind::Parameter:
      return mix(h, std::hash<std::string>{}(n.name));
    case Kind::Independent:
      return h;
    case Kind::Jet:
      return mix(mix(h, std::hash<std::string>{}(n.name)), n.order);
    case Kind::Function:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Power:
      h = mix(h, static_cast<std::size_t>(n.exponent) * 31 + 3);
      break;
    default:
      break;
  }
  for (const auto& a : n.args) h = mix(h, a.hash());
  return h;
}

std::shared_ptr<Node> make_node(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Constant: return 0;
    case Kind::Parameter: return 1;
    case Kind::Independent: return 2;
    case Kind::Jet: return 3;
    case Kind::Function: return 4;
    case Kind::Sqrt: return 5;
    case Kind::Sum: return 6;
    case Kind::Product: return 7;
    case Kind::Power: return 8;
  }
  return 9;
}

int sign_of(int c) { return (c > 0) - (c < 0); }

int compare_base(const Expr& a, const Expr& b);

// Monomial view: (base, exponent) pairs in ascending base order.
void monomial_view(const Expr& e, std::vector<std::pair<Expr, long>>& out, Rational& coeff) {
  out.clear();
  coeff = 1;
  switch (e.kind()) {
    case Kind::Constant:
      coeff = e.value();
      return;
    case Kind::Product:
      for (const auto& f : e.args()) {
        if (f.is_constant()) {
          coeff = f.value();
        } else {
          out.push_back(split_power(f));
        }
      }
      return;
    case Kind::Power:
      out.emplace_back(e.arg(), e.exponent());
      return;
    default:
      out.emplace_back(e, 1);
      return;
  }
}

int compare_terms(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return 0;
  std::vector<std::pair<Expr, long>> va, vb;
  Rational ca, cb;
  monomial_view(a, va, ca);
  monomial_view(b, vb, cb);
  auto ia = va.rbegin();
  auto ib = vb.rbegin();
  for (; ia != va.rend() && ib != vb.rend(); ++ia, ++ib) {
    int c = compare_base(ia->first, ib->first);
    if (c != 0) return c;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != va.rend()) return 1;
  if (ib != vb.rend()) return -1;
  return sign_of(cmp(ca, cb));
}

int compare_base(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return 0;
  int ra = kind_rank(a.kind());
  int rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Constant:
      return sign_of(cmp(a.value(), b.value()));
    case Kind::Parameter:
      return sign_of(a.name().compare(b.name()));
    case Kind::Independent:
      return 0;
    case Kind::Jet:
      if (a.name() != b.name()) return sign_of(a.name().compare(b.name()));
      return a.order() < b.order() ? -1 : (a.order() > b.order() ? 1 : 0);
    case Kind::Function:
      if (a.name() != b.name()) return sign_of(a.name().compare(b.name()));
      return compare(a.arg(), b.arg());
    case Kind::Sqrt:
      return compare(a.arg(), b.arg());
    case Kind::Sum: {
      auto aa = a.args();
      auto bb = b.args();
      std::size_t i = aa.size();
      std::size_t j = bb.size();
      // Sums store terms in descending order.
      std::size_t k = 0;
      for (; k < i && k < j; ++k) {
        int c = compare_terms(aa[k], bb[k]);
        if (c != 0) return c;
      }
      if (i != j) return i < j ? -1 : 1;
      return 0;
    }
    default:
      return compare_terms(a, b);
  }
}

}  // namespace

Expr::Expr() : Expr(0L) {}

Expr::Expr(long value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  n->value.canonicalize();
  n->hash = compute_hash(*n);
  node_ = std::move(n);
}

Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
int Expr::order() const { return node_->order; }
long Expr::exponent() const { return node_->exponent; }
std::span<const Expr> Expr::args() const { return node_->args; }
std::size_t Expr::hash() const { return node_->hash; }

bool Expr::is_zero() const { return is_constant() && sgn(value()) == 0; }
bool Expr::is_one() const { return is_constant() && value() == 1; }
bool Expr::is_atom() const {
  switch (kind()) {
    case Kind::Parameter:
    case Kind::Independent:
    case Kind::Jet:
    case Kind::Function:
    case Kind::Sqrt:
      return true;
    default:
      return false;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind != y.kind || x.order != y.order || x.exponent != y.exponent) return false;
  if (x.kind == Kind::Constant && x.value != y.value) return false;
  if (x.name != y.name || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (x.args[i] != y.args[i]) return false;
  }
  return true;
}

struct ExprFactory {
  static Expr make(std::shared_ptr<Node> n) {
    n->hash = compute_hash(*n);
    return Expr(std::shared_ptr<const Node>(std::move(n)));
  }
};

namespace {

Expr finish(std::shared_ptr<Node> n) { return ExprFactory::make(std::move(n)); }

}  // namespace

Expr Expr::parameter(std::string name) {
  auto n = make_node(Kind::Parameter);
  n->name = std::move(name);
  return finish(std::move(n));
}

Expr Expr::independent() {
  static const Expr x = finish(make_node(Kind::Independent));
  return x;
}

Expr Expr::jet(std::string dependent, int order) {
  if (order < 0) raise(ErrorKind::JetOrderOverflow, "negative jet order");
  auto n = make_node(Kind::Jet);
  n->name = std::move(dependent);
  n->order = order;
  return finish(std::move(n));
}

namespace {

// Expands an exp/ln argument into additive terms, distributing numeric
// coefficients over nested sums.
void linear_terms(const Expr& e, const Rational& scale, std::vector<std::pair<Rational, Expr>>& out) {
  if (e.kind() == Kind::Sum) {
    for (const auto& t : e.args()) linear_terms(t, scale, out);
    return;
  }
  auto [c, rest] = split_coefficient(e);
  if (rest.kind() == Kind::Sum) {
    linear_terms(rest, scale * c, out);
    return;
  }
  out.emplace_back(scale * c, rest);
}

Expr raw_function(std::string name, Expr arg) {
  auto n = make_node(Kind::Function);
  n->name = std::move(name);
  n->args.push_back(std::move(arg));
  return finish(std::move(n));
}

Expr build_exp(const Expr& arg) {
  std::vector<std::pair<Rational, Expr>> terms;
  linear_terms(arg, 1, terms);
  std::vector<Expr> factors;
  std::vector<Expr> rest;
  for (auto& [c, t] : terms) {
    if (t.kind() == Kind::Function && t.name() == "ln" && c.get_den() == 1 &&
        abs(c) <= 64) {
      factors.push_back(pow(t.arg(), c.get_num().get_si()));
    } else if (t.is_one()) {
      rest.push_back(Expr(c));
    } else {
      rest.push_back(Expr(c) * t);
    }
  }
  Expr remaining = Expr::sum(std::move(rest));
  if (!remaining.is_zero()) {
    // exp(-t) is stored as exp(t)^-1 so that the leading term is positive.
    auto lead = remaining.kind() == Kind::Sum ? remaining.arg(0) : remaining;
    auto [lc, lt] = split_coefficient(lead);
    if (sgn(lc) < 0) {
      factors.push_back(pow(raw_function("exp", -remaining), -1));
    } else {
      factors.push_back(raw_function("exp", remaining));
    }
  }
  return Expr::product(std::move(factors));
}

}  // namespace

Expr Expr::function(std::string name, Expr argument) {
  if (name == "exp") return build_exp(argument);
  if (name == "ln") {
    if (argument.is_one()) return Expr(0L);
    if (argument.kind() == Kind::Function && argument.name() == "exp") return argument.arg();
  }
  if (name == "tan" || name == "tanh") {
    if (argument.is_zero()) return Expr(0L);
  }
  return raw_function(std::move(name), std::move(argument));
}

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace

Expr Expr::sqrt(Expr radicand) {
  if (radicand.is_constant()) {
    Rational root;
    if (rational_sqrt(radicand.value(), root)) return Expr(root);
  }
  auto n = make_node(Kind::Sqrt);
  n->args.push_back(std::move(radicand));
  return finish(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  // Collect coefficient per monomial, distributing numeric factors over
  // nested sums.
  std::unordered_map<Expr, Rational, ExprHash> coeffs;
  std::vector<Expr> order;
  Rational constant = 0;
  std::vector<std::pair<Rational, Expr>> stack;
  stack.reserve(terms.size());
  for (auto& t : terms) stack.emplace_back(Rational(1), std::move(t));
  while (!stack.empty()) {
    auto [scale, t] = std::move(stack.back());
    stack.pop_back();
    if (t.kind() == Kind::Sum) {
      for (const auto& s : t.args()) stack.emplace_back(scale, s);
      continue;
    }
    auto [c, rest] = split_coefficient(t);
    if (rest.kind() == Kind::Sum) {
      for (const auto& s : rest.args()) stack.emplace_back(scale * c, s);
      continue;
    }
    Rational w = scale * c;
    if (sgn(w) == 0) continue;
    if (rest.is_one()) {
      constant += w;
      continue;
    }
    auto it = coeffs.find(rest);
    if (it == coeffs.end()) {
      coeffs.emplace(rest, w);
      order.push_back(rest);
    } else {
      it->second += w;
    }
  }
  std::vector<Expr> out;
  out.reserve(order.size() + 1);
  for (const auto& m : order) {
    const Rational& c = coeffs.at(m);
    if (sgn(c) == 0) continue;
    out.push_back(c == 1 ? m : Expr::product({Expr(c), m}));
  }
  if (sgn(constant) != 0) out.push_back(Expr(constant));
  if (out.empty()) return Expr(0L);
  if (out.size() == 1) return out.front();
  std::sort(out.begin(), out.end(), [](const Expr& a, const Expr& b) { return compare(a, b) > 0; });
  auto n = make_node(Kind::Sum);
  n->args = std::move(out);
  return finish(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  Rational coeff = 1;
  std::unordered_map<Expr, long, ExprHash> exps;
  std::vector<Expr> order;
  std::vector<Expr> stack(std::make_move_iterator(factors.begin()), std::make_move_iterator(factors.end()));
  while (!stack.empty()) {
    Expr f = std::move(stack.back());
    stack.pop_back();
    if (f.is_constant()) {
      coeff *= f.value();
      if (sgn(coeff) == 0) return Expr(0L);
      continue;
    }
    if (f.kind() == Kind::Product) {
      for (const auto& g : f.args()) stack.push_back(g);
      continue;
    }
    auto [base, e] = split_power(f);
    auto it = exps.find(base);
    if (it == exps.end()) {
      exps.emplace(base, e);
      order.push_back(base);
    } else {
      it->second += e;
    }
  }
  std::vector<Expr> out;
  for (const auto& b : order) {
    long e = exps.at(b);
    if (e == 0) continue;
    if (b.kind() == Kind::Sqrt && (e >= 2 || e <= -2)) {
      // sqrt(R)^e = R^(e div 2) * sqrt(R)^(e mod 2)
      long q = e / 2;
      long r = e % 2;
      Expr rq = pow(b.arg(), q);
      if (rq.is_constant()) {
        coeff *= rq.value();
      } else if (rq.kind() == Kind::Product) {
        for (const auto& g : rq.args()) {
          if (g.is_constant()) coeff *= g.value(); else out.push_back(g);
        }
      } else {
        out.push_back(rq);
      }
      if (r != 0) out.push_back(r == 1 ? b : pow(b, r));
      continue;
    }
    if (e == 1) {
      out.push_back(b);
    } else {
      auto n = make_node(Kind::Power);
      n->exponent = e;
      n->args.push_back(b);
      out.push_back(finish(std::move(n)));
    }
  }
  if (sgn(coeff) == 0) return Expr(0L);
  // Sqrt folding can produce repeated bases; re-run once if needed.
  bool repeated = false;
  {
    std::unordered_set<Expr, ExprHash> seen;
    for (const auto& f : out) {
      if (!seen.insert(split_power(f).first).second) {
        repeated = true;
        break;
      }
    }
  }
  if (repeated) {
    out.push_back(Expr(coeff));
    return Expr::product(std::move(out));
  }
  if (out.empty()) return Expr(coeff);
  if (out.size() == 1 && coeff == 1) return out.front();
  std::sort(out.begin(), out.end(), [](const Expr& a, const Expr& b) {
    return compare_base(split_power(a).first, split_power(b).first) < 0;
  });
  if (coeff != 1) out.insert(out.begin(), Expr(coeff));
  auto n = make_node(Kind::Product);
  n->args = std::move(out);
  return finish(std::move(n));
}

Expr Expr::power(Expr base, long exponent) {
  if (exponent == 0) return Expr(1L);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    const Rational& b = base.value();
    if (sgn(b) == 0) {
      if (exponent < 0) raise(ErrorKind::DivisionByZero, "division by zero");
      return Expr(0L);
    }
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return Expr(r);
  }
  if (base.kind() == Kind::Product) {
    std::vector<Expr> fs;
    for (const auto& f : base.args()) fs.push_back(Expr::power(f, exponent));
    return Expr::product(std::move(fs));
  }
  if (base.kind() == Kind::Power) {
    return Expr::power(base.arg(), base.exponent() * exponent);
  }
  if (base.kind() == Kind::Sqrt && (exponent >= 2 || exponent <= -2)) {
    return Expr::product({Expr::power(base.arg(), exponent / 2), Expr::power(base, exponent % 2)});
  }
  auto n = make_node(Kind::Power);
  n->exponent = exponent;
  n->args.push_back(std::move(base));
  return finish(std::move(n));
}

// ---------------------------------------------------------------------------

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Expr::sum({a, b});
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero()) return a;
  return Expr::sum({a, Expr::product({Expr(-1L), b})});
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Expr::product({a, b});
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  return Expr::product({a, Expr::power(b, -1)});
}

Expr operator-(const Expr& a) { return Expr::product({Expr(-1L), a}); }

Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

Expr pow(const Expr& base, long exponent) { return Expr::power(base, exponent); }

int compare(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return 0;
  switch (a.kind()) {
    case Kind::Product:
    case Kind::Power:
    case Kind::Constant:
      return compare_terms(a, b);
    default:
      break;
  }
  switch (b.kind()) {
    case Kind::Product:
    case Kind::Power:
    case Kind::Constant:
      return compare_terms(a, b);
    default:
      return compare_base(a, b);
  }
}

std::pair<Rational, Expr> split_coefficient(const Expr& e) {
  if (e.is_constant()) return {e.value(), Expr(1L)};
  if (e.kind() == Kind::Product && e.arg(0).is_constant()) {
    auto args = e.args();
    if (args.size() == 2) return {args[0].value(), args[1]};
    std::vector<Expr> rest(args.begin() + 1, args.end());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->args = std::move(rest);
    return {args[0].value(), ExprFactory::make(std::move(n))};
  }
  return {Rational(1), e};
}

std::pair<Expr, long> split_power(const Expr& e) {
  if (e.kind() == Kind::Power) return {e.arg(), e.exponent()};
  return {e, 1};
}

void visit_dag(const Expr& e, const std::function<void(const Expr&)>& fn) {
  std::unordered_set<const Node*> seen;
  std::vector<std::pair<Expr, bool>> stack{{e, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      fn(cur);
      continue;
    }
    if (!seen.insert(cur.id()).second) continue;
    stack.emplace_back(cur, true);
    for (const auto& a : cur.args()) {
      if (!seen.count(a.id())) stack.emplace_back(a, false);
    }
  }
}

std::size_t dag_size(const Expr& e) {
  std::size_t n = 0;
  visit_dag(e, [&](const Expr&) { ++n; });
  return n;
}

int jet_order(const Expr& e, const std::string& dependent) {
  int best = -1;
  visit_dag(e, [&](const Expr& n) {
    if (n.kind() == Kind::Jet && n.name() == dependent) best = std::max(best, n.order());
  });
  return best;
}

std::vector<std::string> dependents_of(const Expr& e) {
  std::vector<std::string> out;
  visit_dag(e, [&](const Expr& n) {
    if (n.kind() == Kind::Jet && std::find(out.begin(), out.end(), n.name()) == out.end()) {
      out.push_back(n.name());
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_kind(const Expr& e, Kind kind) {
  bool found = false;
  visit_dag(e, [&](const Expr& n) { found = found || n.kind() == kind; });
  return found;
}

bool contains(const Expr& e, const Expr& atom) {
  bool found = false;
  visit_dag(e, [&](const Expr& n) { found = found || n == atom; });
  return found;
}

bool contains_parameter(const Expr& e, const std::string& name) {
  bool found = false;
  visit_dag(e, [&](const Expr& n) {
    found = found || (n.kind() == Kind::Parameter && n.name() == name);
  });
  return found;
}

// ---------------------------------------------------------------------------
// Printing

std::string jet_name(const std::string& dependent, int order) {
  if (order == 0) return dependent;
  if (order < 10) return dependent + std::to_string(order);
  return dependent + "_" + std::to_string(order);
}

namespace {

void print(std::ostream& os, const Expr& e);

bool needs_parens_as_factor(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sum:
      return true;
    case Kind::Constant:
      return sgn(e.value()) < 0 || e.value().get_den() != 1;
    case Kind::Product:
      return true;
    default:
      return false;
  }
}

void print_factor(std::ostream& os, const Expr& base, long e) {
  bool paren = needs_parens_as_factor(base);
  if (paren) os << '(';
  print(os, base);
  if (paren) os << ')';
  if (e != 1) os << '^' << e;
}

void print_product(std::ostream& os, const Expr& e) {
  Rational coeff = 1;
  std::vector<std::pair<Expr, long>> num, den;
  auto args = e.kind() == Kind::Product ? e.args() : std::span<const Expr>(&e, 1);
  for (const auto& f : args) {
    if (f.is_constant()) {
      coeff = f.value();
      continue;
    }
    auto [b, x] = split_power(f);
    if (x < 0) den.emplace_back(b, -x); else num.emplace_back(b, x);
  }
  if (sgn(coeff) < 0) {
    os << '-';
    coeff = -coeff;
  }
  bool first = true;
  mpz_class cn = coeff.get_num();
  mpz_class cd = coeff.get_den();
  if (cn != 1 || num.empty()) {
    os << cn;
    first = false;
  }
  for (const auto& [b, x] : num) {
    if (!first) os << '*';
    print_factor(os, b, x);
    first = false;
  }
  std::size_t nden = den.size() + (cd != 1 ? 1 : 0);
  if (nden == 0) return;
  os << '/';
  if (nden > 1) os << '(';
  bool dfirst = true;
  if (cd != 1) {
    os << cd;
    dfirst = false;
  }
  for (const auto& [b, x] : den) {
    if (!dfirst) os << '*';
    print_factor(os, b, x);
    dfirst = false;
  }
  if (nden > 1) os << ')';
}

void print(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      os << e.value();
      return;
    case Kind::Parameter:
      os << e.name();
      return;
    case Kind::Independent:
      os << 'x';
      return;
    case Kind::Jet:
      os << jet_name(e.name(), e.order());
      return;
    case Kind::Function:
      os << e.name() << '(';
      print(os, e.arg());
      os << ')';
      return;
    case Kind::Sqrt:
      os << "sqrt(";
      print(os, e.arg());
      os << ')';
      return;
    case Kind::Sum: {
      bool first = true;
      for (const auto& t : e.args()) {
        std::ostringstream ts;
        print(ts, t);
        std::string s = ts.str();
        if (first) {
          os << s;
        } else if (!s.empty() && s[0] == '-') {
          os << " - " << s.substr(1);
        } else {
          os << " + " << s;
        }
        first = false;
      }
      return;
    }
    case Kind::Product:
    case Kind::Power:
      print_product(os, e);
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
  print(os, e);
  return os;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::JetOrderOverflow: return "JetOrderOverflow";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::InconsistentRelations: return "InconsistentRelations";
    case ErrorKind::DegenerateSampling: return "DegenerateSampling";
    case ErrorKind::NotATotalDerivative: return "NotATotalDerivative";
    case ErrorKind::IntegrandOutsideClass: return "IntegrandOutsideClass";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::NotClosedForm: return "NotClosedForm";
    case ErrorKind::InvalidEquation: return "InvalidEquation";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::ManifestError: return "ManifestError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Error";
}

}  // namespace jetsym
