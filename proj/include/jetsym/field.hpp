#pragma once

// Exact arithmetic in multi-quadratic fields Q(sqrt r_1, ..., sqrt r_n).
// Generators are adjoined only when independent: no product of a subset
// of radicands times the new radicand is a rational square.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/expr.hpp"

namespace jetsym {

class SurdTower;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Rational& q);  // NOLINT(google-explicit-constructor)

  // (generator subset mask, coefficient), sorted by mask, nonzero coefficients.
  using Terms = std::vector<std::pair<std::uint32_t, Rational>>;
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational rational() const;  // requires is_rational()

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.terms_ == b.terms_; }

  std::string to_string(const SurdTower& tower) const;

 private:
  friend class SurdTower;
  Terms terms_;
};

class SurdTower {
 public:
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  // Raises DivisionByZero on zero.
  FieldElem inverse(const FieldElem& a) const;
  FieldElem power(const FieldElem& a, long exponent) const;

  // A square root of a rational, adjoining a generator when needed.
  // Raises UnsupportedExtension past the generator limit.
  FieldElem sqrt(const Rational& r);

  const std::vector<Rational>& radicands() const { return radicands_; }

  static constexpr std::size_t kMaxGenerators = 12;

 private:
  std::vector<Rational> radicands_;
};

bool is_rational_square(const Rational& q, Rational* root = nullptr);

}  // namespace jetsym
