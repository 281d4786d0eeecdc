#pragma once

// Immutable symbolic expressions over exact rationals.
//
// Expressions are shared DAG nodes. The smart constructors perform light
// simplification (flattening, constant folding, collecting like terms and
// equal bases) and keep the children of sums and products sorted by
// `compare`, so structurally equal input always produces identical trees.
// Full normalization lives in normal_form.hpp.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace jetsym {

using Rational = mpq_class;

enum class Kind : std::uint8_t {
  Constant,
  Parameter,
  Independent,
  Jet,
  Function,
  Sqrt,
  Sum,
  Product,
  Power,
};

struct Node;
struct ExprFactory;

class Expr {
 public:
  Expr();
  Expr(long value);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Expr parameter(std::string name);
  static Expr independent();
  static Expr jet(std::string dependent, int order);
  static Expr function(std::string name, Expr argument);
  static Expr sqrt(Expr radicand);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, long exponent);

  Kind kind() const;
  const Rational& value() const;
  const std::string& name() const;
  int order() const;
  long exponent() const;
  std::span<const Expr> args() const;
  const Expr& arg(std::size_t i = 0) const { return args()[i]; }

  std::size_t hash() const;
  const Node* id() const { return node_.get(); }

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero() const;
  bool is_one() const;
  bool is_atom() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  friend struct ExprFactory;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind;
  std::size_t hash = 0;
  Rational value;
  std::string name;
  int order = 0;
  long exponent = 0;
  std::vector<Expr> args;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);
Expr pow(const Expr& base, long exponent);

// Total order used for sorting terms and factors. Terms are compared as
// monomials, highest base first, so `u3` sorts above `u*u1`.
int compare(const Expr& a, const Expr& b);

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Splits e into (rational coefficient, remaining factor).
std::pair<Rational, Expr> split_coefficient(const Expr& e);

// Splits e into (base, exponent); non-powers have exponent 1.
std::pair<Expr, long> split_power(const Expr& e);

// Visits every distinct node of the DAG once (children before parents).
void visit_dag(const Expr& e, const std::function<void(const Expr&)>& fn);

// Number of distinct DAG nodes.
std::size_t dag_size(const Expr& e);

// Highest jet order of `dependent` in e, or -1 if absent.
int jet_order(const Expr& e, const std::string& dependent);

// All dependent variable names occurring in jet variables of e.
std::vector<std::string> dependents_of(const Expr& e);

bool contains_kind(const Expr& e, Kind kind);
bool contains(const Expr& e, const Expr& atom);
bool contains_parameter(const Expr& e, const std::string& name);

std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

// Printing of jet variables: u, u1 ... u9, u_10 ...
std::string jet_name(const std::string& dependent, int order);

}  // namespace jetsym

template <>
struct std::hash<jetsym::Expr> {
  std::size_t operator()(const jetsym::Expr& e) const { return e.hash(); }
};
