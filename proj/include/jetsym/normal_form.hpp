#pragma once

// Rational normal form over exact rationals.
//
// A value is N / (f_1^e_1 ... f_r^e_r) where N is a Laurent polynomial in
// the registered atoms and each f_i is a normalized polynomial from the
// engine's factor table. Algebraic atoms (surds and function applications
// carrying a quadratic relation) occur in N with degree at most one and
// never occur in a factor: denominators are rationalized by conjugates.
// With these invariants a value is zero exactly when N is the zero
// polynomial.

#include <boost/container/small_vector.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jetsym/context.hpp"
#include "jetsym/expr.hpp"

namespace jetsym {

class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::int32_t>;
  using Storage = boost::container::small_vector<Entry, 4>;

  Monomial() = default;
  static Monomial atom(std::uint32_t index, std::int32_t exponent = 1);

  // Entries sorted by atom index, descending; exponents nonzero.
  const Storage& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::int32_t degree(std::uint32_t atom) const;
  std::size_t hash() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  Monomial inverse() const;
  Monomial without(std::uint32_t atom) const;

  // True when every exponent of this is at most the matching one of other
  // (both read as polynomial monomials).
  bool divides(const Monomial& other) const;

 private:
  Storage entries_;
};

// Lexicographic order, higher atom index more significant.
int lex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms sorted by lex_compare, descending, with nonzero coefficients.
using Poly = std::vector<Term>;

Poly poly_constant(const Rational& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul_term(const Poly& a, const Monomial& m, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

struct RatNF {
  Poly num;
  // (factor id, exponent > 0), sorted by id.
  std::vector<std::pair<std::uint32_t, int>> den;

  bool is_zero() const { return num.empty(); }
};

struct Budget {
  std::size_t max_terms = 4'000'000;  // cumulative terms produced by products
  double seconds = 300.0;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Context& ctx, Budget budget = {});

  const RatNF& convert(const Expr& e);
  Expr to_expr(const RatNF& value);

  // convert, cancel common factors, and render.
  Expr canonicalize(const Expr& e);
  bool is_zero(const Expr& e) { return convert(e).is_zero(); }

  RatNF constant(const Rational& c) const;
  RatNF add(const RatNF& a, const RatNF& b);
  RatNF sub(const RatNF& a, const RatNF& b);
  RatNF mul(const RatNF& a, const RatNF& b);
  RatNF inverse(const RatNF& a);
  RatNF power(const RatNF& a, long exponent);
  RatNF scale(const RatNF& a, const Rational& c) const;
  void cancel(RatNF& value);

  // Brings values to a common denominator and returns their numerators.
  std::vector<Poly> common_numerators(const std::vector<RatNF>& values);

  std::uint32_t atom_index(const Expr& atom);
  const Expr& atom(std::uint32_t index) const { return atoms_[index].expr; }
  std::size_t atom_count() const { return atoms_.size(); }
  bool is_algebraic(std::uint32_t index) const { return atoms_[index].algebraic.has_value(); }
  const Poly& factor(std::uint32_t id) const { return factors_[id].poly; }

  Expr poly_to_expr(const Poly& p);

  const Context& context() const { return ctx_; }

 private:
  struct Algebraic {
    RatNF linear;    // p in s^2 + p s + q = 0
    RatNF constant;  // q
    // powers[k] = (A, B) with s^k = A + B s, from k = 2.
    std::vector<std::pair<RatNF, RatNF>> powers;
  };
  struct AtomInfo {
    Expr expr;
    std::optional<Algebraic> algebraic;
  };
  struct Factor {
    Poly poly;
    std::optional<Expr> expr;
  };

  RatNF convert_node(const Expr& e);
  RatNF atom_value(const Expr& canonical_atom);
  RatNF reduce(Poly p);
  RatNF inverse_poly(const Poly& p);
  RatNF register_denominator(Poly p);
  RatNF den_value(const std::vector<std::pair<std::uint32_t, int>>& den) const;
  Poly den_poly(const std::vector<std::pair<std::uint32_t, int>>& den) const;
  const std::pair<RatNF, RatNF>& algebraic_power(std::uint32_t atom, int k);
  void normalize_leading(Poly& p, Rational& lc) const;
  int canonical_compare(const Monomial& a, const Monomial& b) const;
  Expr factor_expr(std::uint32_t id);
  void charge(std::size_t terms);

  const Context& ctx_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t spent_ = 0;
  std::vector<AtomInfo> atoms_;
  std::vector<std::uint32_t> rank_;  // canonical rank of each atom
  std::unordered_map<Expr, std::uint32_t, ExprHash> atom_ids_;
  std::vector<Factor> factors_;
  std::unordered_multimap<std::size_t, std::uint32_t> factor_lookup_;
  std::unordered_map<const Node*, std::pair<Expr, RatNF>> memo_;
};

// One-shot canonicalization with a fresh engine.
Expr canonicalize(const Context& ctx, const Expr& e);

std::size_t poly_hash(const Poly& p);

}  // namespace jetsym
